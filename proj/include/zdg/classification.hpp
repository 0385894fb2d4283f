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
 * Canonical forms of the idempotent and nilpotent elements of Z(M2(F)), the
 * scalar-orbit equivalence relation A ~ B (A = UB = BV with U, V invertible),
 * and the partition of Z(M2(F)) into its (n+2)^2 equivalence classes.
 *
 * Canonical-form templates, with a, i, j, k nonzero and i != 1:
 *
 *   E0 = [0,0;0,1]   E^0 = [1,0;0,0]   E_a = [0,0;a,1]   E^a = [1,a;0,0]
 *   F_a = [1,0;a,0]  F^a = [0,a;0,1]   E(i,j) = [i, j(1-i); i/j, 1-i]
 *   N = [0,1;0,0]    M = [0,0;1,0]     N(k) = [1, k; -1/k, -1]
 *
 * Every class is the scalar orbit {t * rep : t != 0} of exactly one of these.
 */

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "zdg/mat2.hpp"

namespace zdg {

enum class FormTag : std::uint8_t {
    E0,     // [0,0;0,1]
    Etop0,  // [1,0;0,0]
    Esub,   // E_a
    Esup,   // E^a
    Fsub,   // F_a
    Fsup,   // F^a
    Epair,  // E(i,j)
    N,
    M,
    Nk,     // N(k)
};

inline bool tag_is_idempotent(FormTag t) {
    return t != FormTag::N && t != FormTag::M && t != FormTag::Nk;
}
inline bool tag_is_nilpotent(FormTag t) { return !tag_is_idempotent(t); }

/// Tagged canonical representative; x holds the single parameter (or i for
/// Epair), y holds j for Epair.
struct CanonicalForm {
    FormTag tag = FormTag::E0;
    FieldElement x{}, y{};

    friend bool operator==(const CanonicalForm& a, const CanonicalForm& b) {
        return a.tag == b.tag && a.x == b.x && a.y == b.y;
    }
    friend bool operator<(const CanonicalForm& a, const CanonicalForm& b) {
        if (a.tag != b.tag) return a.tag < b.tag;
        if (a.x != b.x) return a.x < b.x;
        return a.y < b.y;
    }

    Mat2 materialize(const FieldSpec& f) const {
        const FieldElement one = f.one(), zero = f.zero();
        switch (tag) {
            case FormTag::E0:    return {zero, zero, zero, one};
            case FormTag::Etop0: return {one, zero, zero, zero};
            case FormTag::Esub:  return {zero, zero, x, one};
            case FormTag::Esup:  return {one, x, zero, zero};
            case FormTag::Fsub:  return {one, zero, x, zero};
            case FormTag::Fsup:  return {zero, x, zero, one};
            case FormTag::Epair: return {x, f.mul(y, f.sub(one, x)), f.div(x, y), f.sub(one, x)};
            case FormTag::N:     return {zero, one, zero, zero};
            case FormTag::M:     return {zero, zero, one, zero};
            case FormTag::Nk:    return {one, x, f.neg(f.inv(x)), f.neg(one)};
        }
        return mat_zero();
    }

    bool idempotent() const { return tag_is_idempotent(tag); }
    bool nilpotent() const { return tag_is_nilpotent(tag); }

    std::string label(const FieldSpec& f) const {
        switch (tag) {
            case FormTag::E0:    return "E_0";
            case FormTag::Etop0: return "E^0";
            case FormTag::Esub:  return "E_(" + f.label(x) + ")";
            case FormTag::Esup:  return "E^(" + f.label(x) + ")";
            case FormTag::Fsub:  return "F_(" + f.label(x) + ")";
            case FormTag::Fsup:  return "F^(" + f.label(x) + ")";
            case FormTag::Epair: return "E(" + f.label(x) + "," + f.label(y) + ")";
            case FormTag::N:     return "N";
            case FormTag::M:     return "M";
            case FormTag::Nk:    return "N(" + f.label(x) + ")";
        }
        return "?";
    }
};

/// Matches a nonzero singular idempotent against the unique template.
inline CanonicalForm idempotent_form(const Mat2& A, const FieldSpec& f) {
    if (is_zero(A) || !is_idempotent(A, f) || det(A, f).idx != 0)
        throw NotIdempotent("matrix is not a nonzero singular idempotent");
    const FieldElement a = A.a, b = A.b, c = A.c;
    const FieldElement one = f.one();
    if (a.idx == 0) {
        if (b.idx != 0) return {FormTag::Fsup, b, {}};
        if (c.idx != 0) return {FormTag::Esub, c, {}};
        return {FormTag::E0, {}, {}};
    }
    if (a == one) {
        if (b.idx != 0) return {FormTag::Esup, b, {}};
        if (c.idx != 0) return {FormTag::Fsub, c, {}};
        return {FormTag::Etop0, {}, {}};
    }
    // a not in {0, 1}: solve i := a, j := b / (1 - i)
    const FieldElement i = a;
    const FieldElement j = f.div(b, f.sub(one, i));
    CanonicalForm cf{FormTag::Epair, i, j};
    if (cf.materialize(f) != A)
        throw NotIdempotent("idempotent does not match any template");
    return cf;
}

/// Matches a nonzero nilpotent: A = scale * form, scale chosen so the first
/// nonzero entry in reading order equals the template's entry there.
inline std::pair<FieldElement, CanonicalForm> nilpotent_form(const Mat2& A, const FieldSpec& f) {
    if (is_zero(A) || !is_nilpotent(A, f))
        throw NotNilpotent("matrix is not a nonzero nilpotent");
    if (A.a.idx == 0) {
        if (A.b.idx != 0) return {A.b, {FormTag::N, {}, {}}};
        return {A.c, {FormTag::M, {}, {}}};
    }
    // A = a * [1, b/a; c/a, -1] = a * N(k) with k = b/a
    const FieldElement k = f.div(A.b, A.a);
    return {A.a, {FormTag::Nk, k, {}}};
}

/// Canonical class representative of a zero-divisor: the unique idempotent of
/// the class when B is not nilpotent (B / trace(B)), otherwise the unit-scalar
/// normalization matching nilpotent_form.
inline Mat2 class_representative(const Mat2& B, const FieldSpec& f) {
    if (!is_zero_divisor(B, f)) throw NotZeroDivisor("matrix is not a nonzero zero-divisor");
    const FieldElement t = trace(B, f);
    if (t.idx != 0) return scalar_mul(f.inv(t), B, f);
    auto [s, form] = nilpotent_form(B, f);
    return scalar_mul(f.inv(s), B, f);
}

/// Fast path for A ~ B: scalar-orbit membership (Lemma-level fact; the GL2
/// search oracle lives in the test suite).
inline bool related(const Mat2& A, const Mat2& B, const FieldSpec& f) {
    if (!is_zero_divisor(A, f) || !is_zero_divisor(B, f))
        throw NotZeroDivisor("relation is defined on Z(M2(F))");
    for (unsigned s = 1; s < f.q(); ++s)
        if (scalar_mul(f.element(s), B, f) == A) return true;
    return false;
}

/// Equivalence class: canonical representative plus its scalar orbit.
struct ZClass {
    CanonicalForm rep;
    std::vector<Mat2> members; // {t * rep : t != 0}, in lexicographic matrix order
};

/// Named vertex-set families S_0, S_j, T_j covering all class representatives.
struct VertexSetSpec {
    std::string name;                    // "S0", "S1", ..., "T1", ...
    std::vector<CanonicalForm> members;
};

/*
 * Canonical class order. Blocks follow the quotient-graph layout:
 *
 *   S_0 = (M, N, E_0, E^0), then for each j = 1..n the block
 *   S_j = (E_(-1/a_j), E^(-a_j), F^(a_j), F_(1/a_j), N(-a_j)) followed by
 *   T_j = (E(a_j/(a_j - a_i), a_j) : i = 1..n, i != j) in order of i.
 *
 * The S_j nilpotent slot carries N(-a_j): that is the nilpotent whose
 * annihilator pairs are exactly the E/F members of the same block, for every
 * characteristic (at characteristic 2 it coincides with N(a_j)).
 */
inline std::vector<CanonicalForm> class_order(const FieldSpec& f) {
    const unsigned n = f.n();
    std::vector<CanonicalForm> order;
    order.reserve((n + 2) * (n + 2));
    order.push_back({FormTag::M, {}, {}});
    order.push_back({FormTag::N, {}, {}});
    order.push_back({FormTag::E0, {}, {}});
    order.push_back({FormTag::Etop0, {}, {}});
    for (unsigned j = 1; j <= n; ++j) {
        const FieldElement aj = f.element(j);
        order.push_back({FormTag::Esub, f.neg(f.inv(aj)), {}});
        order.push_back({FormTag::Esup, f.neg(aj), {}});
        order.push_back({FormTag::Fsup, aj, {}});
        order.push_back({FormTag::Fsub, f.inv(aj), {}});
        order.push_back({FormTag::Nk, f.neg(aj), {}});
        for (unsigned i = 1; i <= n; ++i) {
            if (i == j) continue;
            const FieldElement ai = f.element(i);
            order.push_back({FormTag::Epair, f.div(aj, f.sub(aj, ai)), aj});
        }
    }
    return order;
}

/// The S_0 / S_j / T_j families in canonical order.
inline std::vector<VertexSetSpec> vertex_sets(const FieldSpec& f) {
    const unsigned n = f.n();
    auto order = class_order(f);
    std::vector<VertexSetSpec> out;
    out.push_back({"S0", {order.begin(), order.begin() + 4}});
    size_t pos = 4;
    std::vector<VertexSetSpec> tsets;
    for (unsigned j = 1; j <= n; ++j) {
        out.push_back({"S" + std::to_string(j), {order.begin() + pos, order.begin() + pos + 5}});
        pos += 5;
        if (n >= 2) {
            tsets.push_back({"T" + std::to_string(j), {order.begin() + pos, order.begin() + pos + (n - 1)}});
            pos += n - 1;
        }
    }
    for (auto& t : tsets) out.push_back(std::move(t));
    return out;
}

/// Partition of Z(M2(F)) into classes, in canonical class order.
inline std::vector<ZClass> all_classes(const FieldSpec& f, unsigned order_cap = 16) {
    auto order = class_order(f);
    std::map<Mat2, size_t> index;
    std::vector<ZClass> classes(order.size());
    for (size_t i = 0; i < order.size(); ++i) {
        classes[i].rep = order[i];
        index[order[i].materialize(f)] = i;
    }
    for (const Mat2& z : zero_divisors(f, order_cap)) {
        const Mat2 rep = class_representative(z, f);
        auto it = index.find(rep);
        if (it == index.end())
            throw NotZeroDivisor("representative not in canonical class list: " + mat_label(rep, f));
        classes[it->second].members.push_back(z);
    }
    return classes;
}

/// Count of E(i,j) classes: the m = n(n-1) family.
inline unsigned long pair_form_count(unsigned n) { return static_cast<unsigned long>(n) * (n - 1); }

} // namespace zdg
