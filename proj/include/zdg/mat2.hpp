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
 * The ring M2(F) of 2x2 matrices over a finite field: arithmetic, the
 * idempotent/nilpotent/unit/zero-divisor predicates, and deterministic
 * enumeration of the nonzero singular matrices Z(M2(F)).
 */

#include <string>
#include <vector>

#include "zdg/finite_field.hpp"

namespace zdg {

/// Row-major 2x2 matrix [[a, b], [c, d]] over one shared field.
struct Mat2 {
    FieldElement a, b, c, d;

    friend bool operator==(const Mat2& x, const Mat2& y) {
        return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
    }
    friend bool operator!=(const Mat2& x, const Mat2& y) { return !(x == y); }
    /// Lexicographic in (a, b, c, d) under the field enumeration order.
    friend bool operator<(const Mat2& x, const Mat2& y) {
        if (x.a != y.a) return x.a < y.a;
        if (x.b != y.b) return x.b < y.b;
        if (x.c != y.c) return x.c < y.c;
        return x.d < y.d;
    }
};

inline Mat2 mat2(unsigned a, unsigned b, unsigned c, unsigned d) {
    return {{static_cast<std::uint16_t>(a)}, {static_cast<std::uint16_t>(b)},
            {static_cast<std::uint16_t>(c)}, {static_cast<std::uint16_t>(d)}};
}

inline Mat2 mat_zero() { return mat2(0, 0, 0, 0); }
inline Mat2 mat_identity() { return mat2(1, 0, 0, 1); }

inline bool is_zero(const Mat2& m) {
    return m.a.idx == 0 && m.b.idx == 0 && m.c.idx == 0 && m.d.idx == 0;
}

inline Mat2 mat_add(const Mat2& x, const Mat2& y, const FieldSpec& f) {
    return {f.add(x.a, y.a), f.add(x.b, y.b), f.add(x.c, y.c), f.add(x.d, y.d)};
}

inline Mat2 mat_mul(const Mat2& x, const Mat2& y, const FieldSpec& f) {
    return {f.add(f.mul(x.a, y.a), f.mul(x.b, y.c)),
            f.add(f.mul(x.a, y.b), f.mul(x.b, y.d)),
            f.add(f.mul(x.c, y.a), f.mul(x.d, y.c)),
            f.add(f.mul(x.c, y.b), f.mul(x.d, y.d))};
}

inline Mat2 scalar_mul(FieldElement s, const Mat2& x, const FieldSpec& f) {
    return {f.mul(s, x.a), f.mul(s, x.b), f.mul(s, x.c), f.mul(s, x.d)};
}

inline FieldElement det(const Mat2& x, const FieldSpec& f) {
    return f.sub(f.mul(x.a, x.d), f.mul(x.b, x.c));
}

inline FieldElement trace(const Mat2& x, const FieldSpec& f) { return f.add(x.a, x.d); }

inline bool is_idempotent(const Mat2& x, const FieldSpec& f) { return mat_mul(x, x, f) == x; }

inline bool is_nilpotent(const Mat2& x, const FieldSpec& f) { return is_zero(mat_mul(x, x, f)); }

inline bool is_unit(const Mat2& x, const FieldSpec& f) { return det(x, f).idx != 0; }

/// Nonzero with zero determinant; equivalently, annihilated on some side.
inline bool is_zero_divisor(const Mat2& x, const FieldSpec& f) {
    return !is_zero(x) && det(x, f).idx == 0;
}

inline std::string mat_label(const Mat2& m, const FieldSpec& f) {
    return "[" + f.label(m.a) + "," + f.label(m.b) + ";" + f.label(m.c) + "," + f.label(m.d) + "]";
}

/// All of Z(M2(F)) in lexicographic (a, b, c, d) order; size n(n+2)^2.
inline std::vector<Mat2> zero_divisors(const FieldSpec& f, unsigned order_cap = 16) {
    if (f.q() > order_cap)
        throw UnsupportedOrder("field order " + std::to_string(f.q()) +
                               " exceeds the enumeration cap " + std::to_string(order_cap));
    std::vector<Mat2> out;
    const unsigned q = f.q();
    out.reserve(static_cast<size_t>(q - 1) * (q + 1) * (q + 1));
    for (unsigned a = 0; a < q; ++a)
        for (unsigned b = 0; b < q; ++b)
            for (unsigned c = 0; c < q; ++c)
                for (unsigned d = 0; d < q; ++d) {
                    Mat2 m = mat2(a, b, c, d);
                    if (is_zero_divisor(m, f)) out.push_back(m);
                }
    return out;
}

} // namespace zdg
