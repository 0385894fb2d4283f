/*
 * Copyright 2026 The zdg Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#pragma once

/*
 * Exact eigenvalues: rationals and quadratic surds (a + b*sqrt(d))/c stored
 * in lowest terms with d squarefree, plus the multiset type used for
 * spectra. Comparison is numeric with an exact algebraic tie-break, so the
 * descending sort used for the alpha-indices is deterministic.
 */

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "zdg/errors.hpp"
#include "zdg/exact_linalg.hpp"

namespace zdg {

/// A real algebraic number of degree at most 2 over Q:
/// rational num/den, or surd (a + b*sqrt(d))/c with c > 0, d > 1 squarefree,
/// b != 0, gcd(a, b, c) = 1.
class AlgebraicEigenvalue {
public:
    AlgebraicEigenvalue() = default;

    static AlgebraicEigenvalue rational(mpq_class v) {
        AlgebraicEigenvalue e;
        v.canonicalize();
        e.num_ = v.get_num();
        e.den_ = v.get_den();
        return e;
    }
    static AlgebraicEigenvalue integer(long v) { return rational(mpq_class(v)); }

    /// The two roots of x^2 - s x + p (requires a positive non-square
    /// discriminant); returned as (plus branch, minus branch).
    static std::pair<AlgebraicEigenvalue, AlgebraicEigenvalue> surd_pair(const mpz_class& s,
                                                                         const mpz_class& p) {
        mpz_class disc = s * s - 4 * p;
        if (disc <= 0) throw ReduciblePolynomial("discriminant must be positive for a real surd pair");
        // split disc = t^2 * d with d squarefree
        mpz_class t = 1, d = disc;
        for (mpz_class f = 2; f * f <= d; ++f) {
            while (d % (f * f) == 0) { d /= f * f; t *= f; }
        }
        if (d == 1) throw ReduciblePolynomial("discriminant is a perfect square");
        AlgebraicEigenvalue plus, minus;
        plus.a_ = s; plus.b_ = t; plus.c_ = 2; plus.d_ = d;
        plus.normalize_surd();
        minus.a_ = s; minus.b_ = -t; minus.c_ = 2; minus.d_ = d;
        minus.normalize_surd();
        return {plus, minus};
    }

    bool is_rational() const { return d_ == 0; }
    const mpz_class& num() const { return num_; }
    const mpz_class& den() const { return den_; }
    bool is_integer() const { return is_rational() && den_ == 1; }

    double approx() const {
        if (is_rational()) return mpq_class(num_, den_).get_d();
        return (a_.get_d() + b_.get_d() * std::sqrt(d_.get_d())) / c_.get_d();
    }

    /// Minimal monic polynomial factor this value contributes: (x - r) for a
    /// rational integer r, or x^2 - s x + p covering both conjugates.
    /// Non-integer rationals cannot arise from monic integer polynomials.
    CharPoly monic_factor() const {
        if (is_rational()) {
            if (den_ != 1) throw UnresolvedFactor("non-integer rational in a monic spectrum");
            return poly_linear(num_);
        }
        // (cx - a)^2 = b^2 d  =>  x^2 - (2a/c) x + (a^2 - b^2 d)/c^2; exact by construction
        mpz_class s = 2 * a_, p = a_ * a_ - b_ * b_ * d_;
        mpz_class sc, pc;
        mpz_divexact(sc.get_mpz_t(), s.get_mpz_t(), c_.get_mpz_t());
        mpz_class c2 = c_ * c_;
        mpz_divexact(pc.get_mpz_t(), p.get_mpz_t(), c2.get_mpz_t());
        return poly_quadratic(sc, pc);
    }

    AlgebraicEigenvalue conjugate() const {
        AlgebraicEigenvalue e = *this;
        e.b_ = -e.b_;
        return e;
    }

    AlgebraicEigenvalue negated() const {
        AlgebraicEigenvalue e = *this;
        e.num_ = -e.num_;
        e.a_ = -e.a_;
        e.b_ = -e.b_;
        return e;
    }

    bool positive_branch() const { return !is_rational() && b_ > 0; }

    friend bool operator==(const AlgebraicEigenvalue& x, const AlgebraicEigenvalue& y) {
        return x.num_ == y.num_ && x.den_ == y.den_ && x.a_ == y.a_ && x.b_ == y.b_ &&
               x.c_ == y.c_ && x.d_ == y.d_;
    }
    friend bool operator!=(const AlgebraicEigenvalue& x, const AlgebraicEigenvalue& y) {
        return !(x == y);
    }

    /// Exact total order (ascending).
    friend bool operator<(const AlgebraicEigenvalue& x, const AlgebraicEigenvalue& y) {
        if (x == y) return false;
        const double dx = x.approx(), dy = y.approx();
        if (dx < dy - 1e-6) return true;
        if (dx > dy + 1e-6) return false;
        return exact_less(x, y);
    }

    std::string str() const {
        if (is_rational()) {
            std::string s = num_.get_str();
            if (den_ != 1) s += "/" + den_.get_str();
            return s;
        }
        std::string root = "sqrt(" + d_.get_str() + ")";
        std::string s;
        if (a_ != 0) s += a_.get_str();
        if (b_ == 1) s += (a_ != 0 ? "+" : "") + root;
        else if (b_ == -1) s += "-" + root;
        else s += (b_ > 0 && a_ != 0 ? "+" : "") + b_.get_str() + "*" + root;
        if (c_ != 1) s = "(" + s + ")/" + c_.get_str();
        return s;
    }

private:
    // rational part (d_ == 0) ...
    mpz_class num_ = 0, den_ = 1;
    // ... or surd (a + b sqrt(d)) / c
    mpz_class a_ = 0, b_ = 0, c_ = 1, d_ = 0;

    void normalize_surd() {
        mpz_class g = gcd(gcd(abs(a_), abs(b_)), c_);
        if (g > 1) { a_ /= g; b_ /= g; c_ /= g; }
    }

    // sign of u + v*sqrt(d), exact
    static int sign_surd(const mpz_class& u, const mpz_class& v, const mpz_class& d) {
        if (v == 0) return sgn(u);
        if (u == 0) return sgn(v);
        if ((u > 0) == (v > 0)) return sgn(u);
        return sgn(v) * sgn(v * v * d - u * u);
    }

    static int sgn(const mpz_class& v) { return v < 0 ? -1 : (v > 0 ? 1 : 0); }

    static bool exact_less(const AlgebraicEigenvalue& x, const AlgebraicEigenvalue& y) {
        if (x.is_rational() && y.is_rational())
            return mpq_class(x.num_, x.den_) < mpq_class(y.num_, y.den_);
        if (x.is_rational()) {
            // x < (a + b sqrt d)/c  <=>  0 < (a*denx - numx*c) + b*denx*sqrt(d)
            return sign_surd(y.a_ * x.den_ - x.num_ * y.c_, y.b_ * x.den_, y.d_) > 0;
        }
        if (y.is_rational()) {
            return sign_surd(x.a_ * y.den_ - y.num_ * x.c_, x.b_ * y.den_, x.d_) < 0;
        }
        // compare (a1 + b1 sd1)/c1 vs (a2 + b2 sd2)/c2:
        // sign of t + v1 sqrt(d1) - v2 sqrt(d2), t = a1 c2 - a2 c1, v1 = b1 c2, v2 = b2 c1
        const mpz_class t = x.a_ * y.c_ - y.a_ * x.c_;
        const mpz_class v1 = x.b_ * y.c_, v2 = y.b_ * x.c_;
        // s1 = sign(t + v1 sqrt(d1)), compare against v2 sqrt(d2)
        const int s1 = sign_surd(t, v1, x.d_);
        const int s2 = sgn(v2);
        if (s1 != s2) return s1 < s2;
        if (s1 == 0) return false; // both zero
        // same sign: compare squares, (t + v1 sqrt d1)^2 vs v2^2 d2
        const mpz_class u = t * t + v1 * v1 * x.d_ - v2 * v2 * y.d_;
        const int cmp = sign_surd(u, 2 * t * v1, x.d_); // sign of squares difference
        return s1 > 0 ? cmp < 0 : cmp > 0;
    }
};

/// Multiset of exact eigenvalues with multiplicities, kept sorted descending.
class SpectrumMultiset {
public:
    void add(const AlgebraicEigenvalue& v, size_t mult) {
        if (mult == 0) return;
        for (auto& [ev, m] : items_)
            if (ev == v) { m += mult; return; }
        items_.emplace_back(v, mult);
        sort();
    }

    const std::vector<std::pair<AlgebraicEigenvalue, size_t>>& items() const { return items_; }

    size_t total() const {
        size_t t = 0;
        for (const auto& [ev, m] : items_) t += m;
        return t;
    }

    mpq_class sum() const {
        mpq_class s = 0;
        for (const auto& [ev, m] : items_) {
            if (ev.is_rational())
                s += mpq_class(ev.num(), ev.den()) * static_cast<long>(m);
            else {
                // conjugate pairs must both be present; their sum is rational
                CharPoly f = ev.monic_factor();
                if (ev.positive_branch()) continue;
                s += mpq_class(-f.c[1]) * static_cast<long>(m); // s of x^2 - sx + p
            }
        }
        return s;
    }

    /// Product of monic factors: the char poly this multiset claims.
    /// Surd conjugates must appear with equal multiplicities.
    CharPoly to_char_poly() const {
        CharPoly p = poly_one();
        for (const auto& [ev, m] : items_) {
            if (ev.is_rational()) {
                p = poly_mul(p, poly_pow(ev.monic_factor(), static_cast<unsigned>(m)));
            } else if (ev.positive_branch()) {
                p = poly_mul(p, poly_pow(ev.monic_factor(), static_cast<unsigned>(m)));
            }
        }
        return p;
    }

    std::vector<double> to_doubles() const {
        std::vector<double> v;
        v.reserve(total());
        for (const auto& [ev, m] : items_)
            for (size_t i = 0; i < m; ++i) v.push_back(ev.approx());
        std::sort(v.rbegin(), v.rend());
        return v;
    }

    std::string str() const {
        std::string s = "{";
        bool first = true;
        for (const auto& [ev, m] : items_) {
            if (!first) s += ", ";
            first = false;
            s += ev.str();
            if (m > 1) s += "^" + std::to_string(m);
        }
        return s + "}";
    }

    friend bool operator==(const SpectrumMultiset& a, const SpectrumMultiset& b) {
        return a.items_ == b.items_;
    }
    friend bool operator!=(const SpectrumMultiset& a, const SpectrumMultiset& b) {
        return !(a == b);
    }

private:
    std::vector<std::pair<AlgebraicEigenvalue, size_t>> items_;

    void sort() {
        std::sort(items_.begin(), items_.end(),
                  [](const auto& x, const auto& y) { return y.first < x.first; });
    }
};

} // namespace zdg
