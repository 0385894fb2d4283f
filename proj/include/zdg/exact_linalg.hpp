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
 * Exact dense linear algebra over the integers:
 *
 *  - characteristic polynomials via the Faddeev-LeVerrier recurrence
 *    (all intermediate divisions are exact over Z),
 *  - determinants and ranks via Bareiss fraction-free elimination,
 *  - eigenvalue multiplicities as exact nullities of A - lambda*I, and the
 *    combined multiplicity of a conjugate quadratic-surd pair as the nullity
 *    of A^2 - s*A + p*I,
 *  - the closed form det(C + (n-1)B) * det(C - B)^(n-1) for block matrices
 *    with constant diagonal block C and off-diagonal block B,
 *  - multi-prime modular rank for dimensions past the exact cap,
 *  - a cyclic Jacobi eigensolver as the floating-point cross-check oracle.
 */

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include <gmpxx.h>

#include "zdg/errors.hpp"
#include "zdg/graph.hpp"

namespace zdg {

/// Dense square matrix of arbitrary-precision integers.
class IntMatrix {
public:
    IntMatrix() = default;
    explicit IntMatrix(size_t n) : n_(n), e_(n * n, mpz_class(0)) {}

    static IntMatrix identity(size_t n) {
        IntMatrix m(n);
        for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    /// Adjacency matrix; a loop contributes 1 on the diagonal.
    static IntMatrix from_graph(const Graph& g) {
        IntMatrix m(g.order());
        for (size_t i = 0; i < g.order(); ++i)
            for (size_t j = 0; j < g.order(); ++j)
                m.at(i, j) = static_cast<int>(g.at(i, j));
        return m;
    }

    /// diag(degree) - adjacency, on simple graphs.
    static IntMatrix laplacian(const Graph& g) {
        if (g.loop_count() != 0) throw NonSymmetric("Laplacian is defined here for simple graphs");
        IntMatrix m(g.order());
        for (size_t i = 0; i < g.order(); ++i) {
            m.at(i, i) = static_cast<long>(g.degree(i));
            for (size_t j = 0; j < g.order(); ++j)
                if (g.at(i, j)) m.at(i, j) -= 1;
        }
        return m;
    }

    size_t dim() const { return n_; }
    mpz_class& at(size_t i, size_t j) { return e_[i * n_ + j]; }
    const mpz_class& at(size_t i, size_t j) const { return e_[i * n_ + j]; }

    bool is_symmetric() const {
        for (size_t i = 0; i < n_; ++i)
            for (size_t j = i + 1; j < n_; ++j)
                if (at(i, j) != at(j, i)) return false;
        return true;
    }

    mpz_class trace() const {
        mpz_class t = 0;
        for (size_t i = 0; i < n_; ++i) t += at(i, i);
        return t;
    }

    IntMatrix mul(const IntMatrix& o) const {
        IntMatrix r(n_);
        for (size_t i = 0; i < n_; ++i)
            for (size_t k = 0; k < n_; ++k) {
                const mpz_class& v = at(i, k);
                if (v == 0) continue;
                for (size_t j = 0; j < n_; ++j) r.at(i, j) += v * o.at(k, j);
            }
        return r;
    }

    IntMatrix add_scaled_identity(const mpz_class& s) const {
        IntMatrix r = *this;
        for (size_t i = 0; i < n_; ++i) r.at(i, i) += s;
        return r;
    }

    friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
        return a.n_ == b.n_ && a.e_ == b.e_;
    }

private:
    size_t n_ = 0;
    std::vector<mpz_class> e_;
};

/// Monic characteristic polynomial det(xI - A); coefficients low-to-high
/// (c[0] is the constant term, c[dim] = 1).
struct CharPoly {
    std::vector<mpz_class> c;
    size_t degree() const { return c.size() - 1; }
    friend bool operator==(const CharPoly& a, const CharPoly& b) { return a.c == b.c; }
};

inline CharPoly poly_one() { return {{mpz_class(1)}}; }

inline CharPoly poly_mul(const CharPoly& a, const CharPoly& b) {
    CharPoly r;
    r.c.assign(a.c.size() + b.c.size() - 1, mpz_class(0));
    for (size_t i = 0; i < a.c.size(); ++i)
        for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
    return r;
}

/// (x - r)
inline CharPoly poly_linear(const mpz_class& r) { return {{-r, mpz_class(1)}}; }

/// (x^2 - s x + p)
inline CharPoly poly_quadratic(const mpz_class& s, const mpz_class& p) {
    return {{p, -s, mpz_class(1)}};
}

inline CharPoly poly_pow(const CharPoly& a, unsigned e) {
    CharPoly r = poly_one();
    for (unsigned i = 0; i < e; ++i) r = poly_mul(r, a);
    return r;
}

/// Divides a by b (monic b); returns true and the quotient when the division
/// is exact over Z.
inline bool poly_try_divide(const CharPoly& a, const CharPoly& b, CharPoly& quotient) {
    if (b.c.back() != 1 || a.c.size() < b.c.size()) return false;
    std::vector<mpz_class> rem = a.c;
    const size_t db = b.degree();
    std::vector<mpz_class> q(a.c.size() - b.c.size() + 1, mpz_class(0));
    for (size_t qi = q.size(); qi-- > 0;) {
        const mpz_class f = rem[qi + db];
        q[qi] = f;
        if (f == 0) continue;
        for (size_t j = 0; j <= db; ++j) rem[qi + j] -= f * b.c[j];
    }
    for (size_t i = 0; i < db; ++i)
        if (rem[i] != 0) return false;
    quotient.c = std::move(q);
    return true;
}

/// Evaluates p at an integer point.
inline mpz_class poly_eval(const CharPoly& p, const mpz_class& x) {
    mpz_class v = 0;
    for (size_t i = p.c.size(); i-- > 0;) v = v * x + p.c[i];
    return v;
}

/// Faddeev-LeVerrier: exact char poly of an integer matrix, O(d^4) bigint ops.
inline CharPoly char_poly(const IntMatrix& a, size_t exact_cap = 256) {
    const size_t d = a.dim();
    if (d > exact_cap)
        throw DimensionTooLarge("char_poly dimension " + std::to_string(d) +
                                " exceeds cap " + std::to_string(exact_cap));
    CharPoly p;
    p.c.assign(d + 1, mpz_class(0));
    p.c[d] = 1;
    if (d == 0) return p;
    IntMatrix m = a;
    mpz_class c = -m.trace();
    p.c[d - 1] = c;
    for (size_t k = 2; k <= d; ++k) {
        m = a.mul(m.add_scaled_identity(c));
        c = -m.trace();
        mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), mpz_class(k).get_mpz_t());
        p.c[d - k] = c;
    }
    return p;
}

/// Bareiss fraction-free determinant.
inline mpz_class exact_det(IntMatrix m) {
    const size_t n = m.dim();
    if (n == 0) return 1;
    mpz_class prev = 1;
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m.at(k, k) == 0) {
            size_t piv = k + 1;
            while (piv < n && m.at(piv, k) == 0) ++piv;
            if (piv == n) return 0;
            for (size_t j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(piv, j));
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j) {
                mpz_class v = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                m.at(i, j) = v;
            }
        for (size_t i = k + 1; i < n; ++i) m.at(i, k) = 0;
        prev = m.at(k, k);
    }
    return sign > 0 ? m.at(n - 1, n - 1) : -m.at(n - 1, n - 1);
}

/// Bareiss fraction-free rank (row and column pivoting).
inline size_t exact_rank(IntMatrix m) {
    const size_t n = m.dim();
    mpz_class prev = 1;
    size_t rank = 0;
    for (size_t k = 0; k < n; ++k) {
        // find any nonzero pivot in the trailing submatrix
        size_t pi = n, pj = n;
        for (size_t i = k; i < n && pi == n; ++i)
            for (size_t j = k; j < n; ++j)
                if (m.at(i, j) != 0) { pi = i; pj = j; break; }
        if (pi == n) break;
        if (pi != k)
            for (size_t j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(pi, j));
        if (pj != k)
            for (size_t i = 0; i < n; ++i) std::swap(m.at(i, k), m.at(i, pj));
        ++rank;
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j) {
                mpz_class v = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                m.at(i, j) = v;
            }
        for (size_t i = k + 1; i < n; ++i) m.at(i, k) = 0;
        prev = m.at(k, k);
    }
    return rank;
}

/// Rank modulo several 30-bit primes (max over primes). Correct with
/// probability > 1 - 1e-9; callers must flag results as probabilistic.
inline size_t rank_modular(const IntMatrix& a, unsigned num_primes = 5,
                           std::uint64_t seed = 0x5eed5eedULL) {
    std::mt19937_64 rng(seed);
    auto is_prime_u64 = [](std::uint64_t v) {
        if (v < 2) return false;
        for (std::uint64_t d = 2; d * d <= v; ++d)
            if (v % d == 0) return false;
        return true;
    };
    const size_t n = a.dim();
    size_t best = 0;
    for (unsigned t = 0; t < num_primes; ++t) {
        std::uint64_t p = 0;
        do { p = ((1ULL << 29) + (rng() % (1ULL << 29))) | 1ULL; } while (!is_prime_u64(p));
        std::vector<std::uint64_t> m(n * n);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) {
                mpz_class r = a.at(i, j) % static_cast<long>(p);
                if (r < 0) r += static_cast<long>(p);
                m[i * n + j] = r.get_ui();
            }
        // Gaussian elimination mod p
        size_t rank = 0;
        auto inv_mod = [&](std::uint64_t x) {
            // Fermat
            std::uint64_t e = p - 2, b = x % p, r = 1;
            while (e) {
                if (e & 1) r = (__uint128_t)r * b % p;
                b = (__uint128_t)b * b % p;
                e >>= 1;
            }
            return r;
        };
        for (size_t col = 0; col < n && rank < n; ++col) {
            size_t piv = rank;
            while (piv < n && m[piv * n + col] == 0) ++piv;
            if (piv == n) continue;
            if (piv != rank)
                for (size_t j = 0; j < n; ++j) std::swap(m[piv * n + j], m[rank * n + j]);
            const std::uint64_t ip = inv_mod(m[rank * n + col]);
            for (size_t i = rank + 1; i < n; ++i) {
                if (m[i * n + col] == 0) continue;
                const std::uint64_t f = (__uint128_t)m[i * n + col] * ip % p;
                for (size_t j = col; j < n; ++j) {
                    std::uint64_t v = m[i * n + j] + p - (__uint128_t)f * m[rank * n + j] % p;
                    m[i * n + j] = v >= p ? v - p : v;
                }
            }
            ++rank;
        }
        best = std::max(best, rank);
    }
    return best;
}

/// Exact nullity of (A - lambda I) over Q, for rational lambda = num/den.
inline size_t multiplicity(const IntMatrix& a, const mpq_class& lambda, size_t exact_cap = 300,
                           bool* probabilistic = nullptr) {
    IntMatrix b(a.dim());
    const mpz_class num = lambda.get_num(), den = lambda.get_den();
    for (size_t i = 0; i < a.dim(); ++i)
        for (size_t j = 0; j < a.dim(); ++j) b.at(i, j) = den * a.at(i, j);
    for (size_t i = 0; i < a.dim(); ++i) b.at(i, i) -= num;
    if (a.dim() <= exact_cap) {
        if (probabilistic) *probabilistic = false;
        return a.dim() - exact_rank(std::move(b));
    }
    if (probabilistic) *probabilistic = true;
    return a.dim() - rank_modular(b);
}

/// Combined multiplicity of the conjugate roots of x^2 - s x + p, as the
/// exact nullity of A^2 - sA + pI. Requires the quadratic to be irreducible
/// over Q (discriminant not a perfect square).
inline size_t surd_pair_multiplicity(const IntMatrix& a, const mpz_class& s, const mpz_class& p,
                                     size_t exact_cap = 300, bool* probabilistic = nullptr) {
    const mpz_class disc = s * s - 4 * p;
    if (disc >= 0) {
        mpz_class r = sqrt(disc);
        if (r * r == disc)
            throw ReduciblePolynomial("x^2 - " + s.get_str() + "x + " + p.get_str() +
                                      " factors over the rationals");
    }
    IntMatrix b = a.mul(a);
    for (size_t i = 0; i < a.dim(); ++i)
        for (size_t j = 0; j < a.dim(); ++j) b.at(i, j) -= s * a.at(i, j);
    for (size_t i = 0; i < a.dim(); ++i) b.at(i, i) += p;
    if (a.dim() <= exact_cap) {
        if (probabilistic) *probabilistic = false;
        return a.dim() - exact_rank(std::move(b));
    }
    if (probabilistic) *probabilistic = true;
    return a.dim() - rank_modular(b);
}

/// det of the nm x nm block matrix with C repeated on the diagonal and B
/// everywhere off-diagonal, via det(C + (n-1)B) * det(C - B)^(n-1).
inline mpz_class block_structured_det(const IntMatrix& c, const IntMatrix& b, unsigned n) {
    if (c.dim() != b.dim()) throw SizeMismatch("block matrices must share dimensions");
    IntMatrix sum(c.dim()), diff(c.dim());
    for (size_t i = 0; i < c.dim(); ++i)
        for (size_t j = 0; j < c.dim(); ++j) {
            sum.at(i, j) = c.at(i, j) + mpz_class(static_cast<long>(n) - 1) * b.at(i, j);
            diff.at(i, j) = c.at(i, j) - b.at(i, j);
        }
    mpz_class result = exact_det(std::move(sum));
    mpz_class dd = exact_det(std::move(diff));
    mpz_class po;
    mpz_pow_ui(po.get_mpz_t(), dd.get_mpz_t(), n - 1);
    return result * po;
}

/// Assembles the block matrix of block_structured_det (test/oracle helper).
inline IntMatrix assemble_block_matrix(const IntMatrix& c, const IntMatrix& b, unsigned n) {
    const size_t m = c.dim();
    IntMatrix big(m * n);
    for (unsigned bi = 0; bi < n; ++bi)
        for (unsigned bj = 0; bj < n; ++bj)
            for (size_t i = 0; i < m; ++i)
                for (size_t j = 0; j < m; ++j)
                    big.at(bi * m + i, bj * m + j) = (bi == bj ? c.at(i, j) : b.at(i, j));
    return big;
}

/// Cyclic Jacobi on a symmetric double matrix (row-major), descending output.
inline std::vector<double> numeric_spectrum_dense(std::vector<double> m, size_t n) {
    if (n == 0) return {};
    double fro = 0;
    for (double v : m) fro += v * v;
    fro = std::sqrt(fro);
    const double tol = 1e-12 * (fro > 0 ? fro : 1.0);
    auto off_norm = [&]() {
        double s = 0;
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j)
                if (i != j) s += m[i * n + j] * m[i * n + j];
        return std::sqrt(s);
    };
    for (int sweep = 0; sweep < 100 && off_norm() > tol; ++sweep) {
        for (size_t p = 0; p + 1 < n; ++p)
            for (size_t q = p + 1; q < n; ++q) {
                const double apq = m[p * n + q];
                if (std::abs(apq) <= tol / (10.0 * n)) continue;
                const double app = m[p * n + p], aqq = m[q * n + q];
                const double theta = (aqq - app) / (2 * apq);
                const double t = (theta >= 0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double cs = 1.0 / std::sqrt(t * t + 1.0), sn = t * cs;
                for (size_t k = 0; k < n; ++k) {
                    const double akp = m[k * n + p], akq = m[k * n + q];
                    m[k * n + p] = cs * akp - sn * akq;
                    m[k * n + q] = sn * akp + cs * akq;
                }
                for (size_t k = 0; k < n; ++k) {
                    const double apk = m[p * n + k], aqk = m[q * n + k];
                    m[p * n + k] = cs * apk - sn * aqk;
                    m[q * n + k] = sn * apk + cs * aqk;
                }
            }
    }
    std::vector<double> eig(n);
    for (size_t i = 0; i < n; ++i) eig[i] = m[i * n + i];
    std::sort(eig.rbegin(), eig.rend());
    return eig;
}

/// All eigenvalues of a symmetric integer matrix, sorted descending.
/// Residual per eigenpair stays within 1e-8 * ||A||.
inline std::vector<double> numeric_spectrum(const IntMatrix& m) {
    if (!m.is_symmetric()) throw NonSymmetric("numeric_spectrum requires a symmetric matrix");
    const size_t n = m.dim();
    std::vector<double> a(n * n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) a[i * n + j] = m.at(i, j).get_d();
    return numeric_spectrum_dense(std::move(a), n);
}

} // namespace zdg
