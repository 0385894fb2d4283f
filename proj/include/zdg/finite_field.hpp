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
 * Finite fields GF(p^k) of small order (q <= 64).
 *
 * Elements are stored as indices into a canonical enumeration: index 0 is
 * the zero element, index 1 is the multiplicative identity, and the
 * remaining elements follow in lexicographic order of their coefficient
 * vectors (equivalently, index == sum c_i * p^i for the coefficient vector
 * (c_0, ..., c_{k-1}) of the residue polynomial). All arithmetic goes
 * through full lookup tables built once at construction, which keeps the
 * downstream enumeration of q^4 matrices cheap.
 */

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "zdg/errors.hpp"

namespace zdg {

/// Element of GF(q), a plain index into the field's enumeration.
struct FieldElement {
    std::uint16_t idx = 0;
    friend bool operator==(FieldElement a, FieldElement b) { return a.idx == b.idx; }
    friend bool operator!=(FieldElement a, FieldElement b) { return a.idx != b.idx; }
    friend bool operator<(FieldElement a, FieldElement b) { return a.idx < b.idx; }
};

namespace detail {

inline bool is_prime(unsigned v) {
    if (v < 2) return false;
    for (unsigned d = 2; d * d <= v; ++d)
        if (v % d == 0) return false;
    return true;
}

// Built-in irreducible moduli (coefficients c_0..c_k, little-endian) for the
// prime powers up to 64. Any irreducible choice yields an isomorphic field.
inline std::optional<std::vector<int>> builtin_modulus(unsigned p, unsigned k) {
    struct Entry { unsigned p, k; std::vector<int> c; };
    static const std::vector<Entry> table = {
        {2, 2, {1, 1, 1}},          // x^2 + x + 1
        {2, 3, {1, 1, 0, 1}},       // x^3 + x + 1
        {2, 4, {1, 1, 0, 0, 1}},    // x^4 + x + 1
        {2, 5, {1, 0, 1, 0, 0, 1}}, // x^5 + x^2 + 1
        {2, 6, {1, 1, 0, 0, 0, 0, 1}}, // x^6 + x + 1
        {3, 2, {1, 0, 1}},          // x^2 + 1
        {3, 3, {1, 2, 0, 1}},       // x^3 + 2x + 1
        {5, 2, {2, 0, 1}},          // x^2 + 2
        {7, 2, {1, 0, 1}},          // x^2 + 1
    };
    for (const auto& e : table)
        if (e.p == p && e.k == k) return e.c;
    return std::nullopt;
}

} // namespace detail

/// A finite field GF(p^k) with precomputed arithmetic tables.
class FieldSpec {
public:
    /// Builds GF(p^k). For k > 1 the modulus (monic, degree k, coefficients
    /// little-endian mod p) is taken from the built-in table when absent and
    /// is always re-checked for irreducibility.
    static FieldSpec make(unsigned p, unsigned k,
                          std::optional<std::vector<int>> modulus = std::nullopt,
                          unsigned order_cap = 64) {
        if (!detail::is_prime(p))
            throw NonPrimeCharacteristic("characteristic " + std::to_string(p) + " is not prime");
        if (k < 1) throw UnsupportedOrder("extension degree must be >= 1");
        unsigned long q = 1;
        for (unsigned i = 0; i < k; ++i) {
            q *= p;
            if (q > order_cap)
                throw UnsupportedOrder("field order " + std::to_string(q) +
                                       " exceeds cap " + std::to_string(order_cap));
        }
        FieldSpec f;
        f.p_ = p;
        f.k_ = k;
        f.q_ = static_cast<unsigned>(q);
        if (k == 1) {
            f.modulus_.clear();
        } else {
            if (!modulus) {
                auto m = detail::builtin_modulus(p, k);
                if (!m)
                    throw UnsupportedOrder("no built-in modulus for GF(" + std::to_string(p) +
                                           "^" + std::to_string(k) + ")");
                modulus = *m;
            }
            f.modulus_ = normalize_modulus(*modulus, p, k);
            f.check_irreducible();
        }
        f.build_tables();
        return f;
    }

    unsigned p() const { return p_; }
    unsigned degree() const { return k_; }
    unsigned q() const { return q_; }
    unsigned n() const { return q_ - 1; }
    const std::vector<int>& modulus() const { return modulus_; }

    FieldElement zero() const { return {0}; }
    FieldElement one() const { return {1}; }
    FieldElement element(unsigned i) const { return {static_cast<std::uint16_t>(i)}; }

    FieldElement add(FieldElement a, FieldElement b) const { return {add_[a.idx * q_ + b.idx]}; }
    FieldElement mul(FieldElement a, FieldElement b) const { return {mul_[a.idx * q_ + b.idx]}; }
    FieldElement neg(FieldElement a) const { return {neg_[a.idx]}; }
    FieldElement sub(FieldElement a, FieldElement b) const { return add(a, neg(b)); }
    FieldElement inv(FieldElement a) const {
        if (a.idx == 0) throw DivisionByZero("inverse of zero");
        return {inv_[a.idx]};
    }
    FieldElement div(FieldElement a, FieldElement b) const { return mul(a, inv(b)); }

    /// Canonical enumeration: zero, one, then lexicographic coefficient order.
    std::vector<FieldElement> enumerate() const {
        std::vector<FieldElement> out(q_);
        for (unsigned i = 0; i < q_; ++i) out[i] = {static_cast<std::uint16_t>(i)};
        return out;
    }

    /// Coefficient vector (c_0, ..., c_{k-1}) of an element.
    std::vector<int> coefficients(FieldElement a) const {
        std::vector<int> c(k_);
        unsigned v = a.idx;
        for (unsigned i = 0; i < k_; ++i) { c[i] = static_cast<int>(v % p_); v /= p_; }
        return c;
    }

    /// Residue-polynomial label: "0", "1", "2", "x", "x+1", "2x+2", ...
    std::string label(FieldElement a) const {
        if (k_ == 1) return std::to_string(a.idx);
        auto c = coefficients(a);
        std::string s;
        for (int i = static_cast<int>(k_) - 1; i >= 0; --i) {
            if (c[i] == 0) continue;
            if (!s.empty()) s += "+";
            if (i == 0) s += std::to_string(c[i]);
            else {
                if (c[i] != 1) s += std::to_string(c[i]);
                s += (i == 1) ? "x" : "x^" + std::to_string(i);
            }
        }
        return s.empty() ? "0" : s;
    }

    friend bool operator==(const FieldSpec& a, const FieldSpec& b) {
        return a.p_ == b.p_ && a.k_ == b.k_ && a.modulus_ == b.modulus_;
    }

private:
    unsigned p_ = 2, k_ = 1, q_ = 2;
    std::vector<int> modulus_; // empty for prime fields
    std::vector<std::uint16_t> add_, mul_, neg_, inv_;

    static std::vector<int> normalize_modulus(std::vector<int> m, unsigned p, unsigned k) {
        if (m.size() != k + 1)
            throw ReducibleModulus("modulus must have degree " + std::to_string(k));
        for (auto& c : m) { c %= static_cast<int>(p); if (c < 0) c += static_cast<int>(p); }
        if (m[k] != 1) throw ReducibleModulus("modulus must be monic");
        return m;
    }

    // Polynomial arithmetic over GF(p) on little-endian coefficient vectors.
    static std::vector<int> poly_mod(std::vector<int> a, const std::vector<int>& m, unsigned p) {
        const int dm = static_cast<int>(m.size()) - 1;
        for (int i = static_cast<int>(a.size()) - 1; i >= dm; --i) {
            const int f = a[i] % static_cast<int>(p);
            if (f == 0) continue;
            for (int j = 0; j <= dm; ++j) {
                a[i - dm + j] = ((a[i - dm + j] - f * m[j]) % static_cast<int>(p) + static_cast<int>(p)) % static_cast<int>(p);
            }
        }
        a.resize(dm);
        return a;
    }

    static std::vector<int> poly_mul(const std::vector<int>& a, const std::vector<int>& b, unsigned p) {
        std::vector<int> c(a.size() + b.size() - 1, 0);
        for (size_t i = 0; i < a.size(); ++i)
            for (size_t j = 0; j < b.size(); ++j)
                c[i + j] = (c[i + j] + a[i] * b[j]) % static_cast<int>(p);
        return c;
    }

    // Exhaustive root/factor search; fine for q <= 64.
    void check_irreducible() const {
        const unsigned p = p_, k = k_;
        // A degree-d factor with d <= k/2 suffices to witness reducibility.
        for (unsigned d = 1; d <= k / 2; ++d) {
            unsigned long count = 1;
            for (unsigned i = 0; i < d; ++i) count *= p;
            for (unsigned long t = 0; t < count; ++t) {
                // monic candidate divisor of degree d
                std::vector<int> g(d + 1, 0);
                unsigned long v = t;
                for (unsigned i = 0; i < d; ++i) { g[i] = static_cast<int>(v % p); v /= p; }
                g[d] = 1;
                if (poly_divides(g, modulus_, p))
                    throw ReducibleModulus("modulus has a degree-" + std::to_string(d) + " factor");
            }
        }
    }

    static bool poly_divides(const std::vector<int>& g, std::vector<int> f, unsigned p) {
        // long division of f by monic g over GF(p); true iff remainder is zero
        const int dg = static_cast<int>(g.size()) - 1;
        for (int i = static_cast<int>(f.size()) - 1; i >= dg; --i) {
            const int c = f[i];
            if (c == 0) continue;
            for (int j = 0; j <= dg; ++j)
                f[i - dg + j] = ((f[i - dg + j] - c * g[j]) % static_cast<int>(p) + static_cast<int>(p)) % static_cast<int>(p);
        }
        for (int i = 0; i < dg; ++i)
            if (f[i] != 0) return false;
        return true;
    }

    void build_tables() {
        const unsigned q = q_;
        add_.assign(static_cast<size_t>(q) * q, 0);
        mul_.assign(static_cast<size_t>(q) * q, 0);
        neg_.assign(q, 0);
        inv_.assign(q, 0);
        auto coeffs = [&](unsigned v) {
            std::vector<int> c(k_);
            for (unsigned i = 0; i < k_; ++i) { c[i] = static_cast<int>(v % p_); v /= p_; }
            return c;
        };
        auto index_of = [&](const std::vector<int>& c) {
            unsigned v = 0, w = 1;
            for (unsigned i = 0; i < k_; ++i) { v += static_cast<unsigned>(c[i]) * w; w *= p_; }
            return v;
        };
        for (unsigned a = 0; a < q; ++a) {
            auto ca = coeffs(a);
            std::vector<int> cn(k_);
            for (unsigned i = 0; i < k_; ++i) cn[i] = (static_cast<int>(p_) - ca[i]) % static_cast<int>(p_);
            neg_[a] = static_cast<std::uint16_t>(index_of(cn));
            for (unsigned b = 0; b < q; ++b) {
                auto cb = coeffs(b);
                std::vector<int> cs(k_);
                for (unsigned i = 0; i < k_; ++i) cs[i] = (ca[i] + cb[i]) % static_cast<int>(p_);
                add_[a * q + b] = static_cast<std::uint16_t>(index_of(cs));
                std::vector<int> cm;
                if (k_ == 1) {
                    cm = {static_cast<int>((static_cast<unsigned long>(a) * b) % p_)};
                } else {
                    cm = poly_mod(poly_mul(ca, cb, p_), modulus_, p_);
                }
                mul_[a * q + b] = static_cast<std::uint16_t>(index_of(cm));
            }
        }
        for (unsigned a = 1; a < q; ++a)
            for (unsigned b = 1; b < q; ++b)
                if (mul_[a * q + b] == 1) { inv_[a] = static_cast<std::uint16_t>(b); break; }
    }
};

/// Parses the CLI field argument "p^k[:modulus-hex]" or plain "q" for a prime
/// power with a built-in modulus. The hex value encodes the modulus
/// coefficients little-endian base p (value = sum c_i p^i).
inline FieldSpec parse_field(const std::string& arg, unsigned order_cap = 64) {
    std::string spec = arg, modhex;
    if (auto pos = spec.find(':'); pos != std::string::npos) {
        modhex = spec.substr(pos + 1);
        spec = spec.substr(0, pos);
    }
    unsigned p = 0, k = 1;
    try {
        if (auto pos = spec.find('^'); pos != std::string::npos) {
            p = static_cast<unsigned>(std::stoul(spec.substr(0, pos)));
            k = static_cast<unsigned>(std::stoul(spec.substr(pos + 1)));
        } else {
            // plain order: factor as p^k
            unsigned long q = std::stoul(spec);
            if (q < 2) throw NonPrimeCharacteristic("field order must be >= 2");
            unsigned long b = q;
            unsigned d = 2;
            while (d * d <= b && b % d != 0) ++d;
            p = (d * d <= b) ? d : static_cast<unsigned>(b);
            k = 0;
            while (b > 1) {
                if (b % p != 0)
                    throw NonPrimeCharacteristic(std::to_string(q) + " is not a prime power");
                b /= p;
                ++k;
            }
        }
    } catch (const Error&) {
        throw;
    } catch (const std::exception&) {
        throw NonPrimeCharacteristic("cannot parse field specification '" + arg + "'");
    }
    std::optional<std::vector<int>> modulus;
    if (!modhex.empty()) {
        unsigned long v = std::stoul(modhex, nullptr, 16);
        std::vector<int> c;
        while (v > 0) { c.push_back(static_cast<int>(v % p)); v /= p; }
        if (c.size() != k + 1)
            throw ReducibleModulus("modulus encoding has degree " +
                                   std::to_string(c.empty() ? 0 : c.size() - 1) +
                                   ", expected " + std::to_string(k));
        modulus = c;
    }
    return FieldSpec::make(p, k, modulus, order_cap);
}

/// Canonical "p^k[:modulus-hex]" string for a field (round-trips via parse_field).
inline std::string field_to_string(const FieldSpec& f) {
    std::string s = std::to_string(f.p());
    if (f.degree() > 1) {
        s += "^" + std::to_string(f.degree());
        unsigned long v = 0, w = 1;
        for (size_t i = 0; i < f.modulus().size(); ++i) { v += static_cast<unsigned long>(f.modulus()[i]) * w; w *= f.p(); }
        char buf[32];
        std::snprintf(buf, sizeof buf, ":%lx", v);
        s += buf;
    }
    return s;
}

} // namespace zdg
