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
 * Graph construction for the zero-divisor graph Gamma(M2(F)), the
 * quotient-representative graph H on the idempotent/nilpotent classes, the
 * induced subgraphs H1-H4 on the S_j / T_j vertex families, and the
 * H-generalized join.
 *
 * Loop policy: Gamma is simple by definition (distinct vertices only). H is
 * built either simple or loops-allowed; in the latter case every nilpotent
 * vertex x carries a loop (x*x = 0) and the loop counts +1 towards |N(x)|,
 * which makes H exactly (2n+3)-regular.
 */

#include <algorithm>
#include <string>
#include <vector>

#include "zdg/classification.hpp"

namespace zdg {

enum class LoopPolicy { Simple, LoopsAllowed };

/// Labeled vertex set with a symmetric 0/1 adjacency matrix.
struct Graph {
    std::vector<std::string> labels;
    std::vector<std::uint8_t> adj; // dense row-major order x order
    LoopPolicy loop_policy = LoopPolicy::Simple;

    size_t order() const { return labels.size(); }

    std::uint8_t at(size_t i, size_t j) const { return adj[i * order() + j]; }
    void set(size_t i, size_t j, std::uint8_t v) {
        adj[i * order() + j] = v;
        adj[j * order() + i] = v;
    }

    /// Loop counts +1.
    size_t degree(size_t i) const {
        size_t d = 0;
        for (size_t j = 0; j < order(); ++j) d += at(i, j);
        return d;
    }

    size_t edge_count() const { // loops counted once
        size_t twice = 0, loops = 0;
        for (size_t i = 0; i < order(); ++i) {
            loops += at(i, i);
            for (size_t j = 0; j < order(); ++j) twice += at(i, j);
        }
        return (twice - loops) / 2 + loops;
    }

    size_t loop_count() const {
        size_t l = 0;
        for (size_t i = 0; i < order(); ++i) l += at(i, i);
        return l;
    }

    Graph induced(const std::vector<size_t>& keep) const {
        Graph g;
        g.loop_policy = loop_policy;
        g.labels.reserve(keep.size());
        for (size_t i : keep) g.labels.push_back(labels[i]);
        g.adj.assign(keep.size() * keep.size(), 0);
        for (size_t i = 0; i < keep.size(); ++i)
            for (size_t j = 0; j < keep.size(); ++j)
                g.adj[i * keep.size() + j] = at(keep[i], keep[j]);
        return g;
    }

    Graph without_loops() const {
        Graph g = *this;
        g.loop_policy = LoopPolicy::Simple;
        for (size_t i = 0; i < order(); ++i) g.adj[i * order() + i] = 0;
        return g;
    }

    static Graph empty(std::vector<std::string> labels, LoopPolicy policy = LoopPolicy::Simple) {
        Graph g;
        g.labels = std::move(labels);
        g.adj.assign(g.order() * g.order(), 0);
        g.loop_policy = policy;
        return g;
    }

    /// Complete graph K_m or its complement on given labels.
    static Graph complete(std::vector<std::string> labels) {
        Graph g = empty(std::move(labels));
        for (size_t i = 0; i < g.order(); ++i)
            for (size_t j = i + 1; j < g.order(); ++j) g.set(i, j, 1);
        return g;
    }

    static Graph null_graph(std::vector<std::string> labels) { return empty(std::move(labels)); }

    static Graph cycle(std::vector<std::string> labels) {
        Graph g = empty(std::move(labels));
        const size_t m = g.order();
        if (m < 3) return g;
        for (size_t i = 0; i < m; ++i) g.set(i, (i + 1) % m, 1);
        return g;
    }
};

inline bool adjacent_in_ring(const Mat2& x, const Mat2& y, const FieldSpec& f) {
    return is_zero(mat_mul(x, y, f)) || is_zero(mat_mul(y, x, f));
}

/// The zero-divisor graph: simple, vertices all of Z(M2(F)) in enumeration
/// order, edge iff xy = 0 or yx = 0 for distinct x, y.
inline Graph build_gamma(const FieldSpec& f, unsigned order_cap = 16) {
    auto zs = zero_divisors(f, order_cap);
    std::vector<std::string> labels;
    labels.reserve(zs.size());
    for (const auto& z : zs) labels.push_back(mat_label(z, f));
    Graph g = Graph::empty(std::move(labels));
    for (size_t i = 0; i < zs.size(); ++i)
        for (size_t j = i + 1; j < zs.size(); ++j)
            if (adjacent_in_ring(zs[i], zs[j], f)) g.set(i, j, 1);
    return g;
}

/// The graph H on all idempotent and nilpotent class representatives, in
/// canonical class order. Under LoopsAllowed each nilpotent vertex has a loop
/// and |N(x)| = 2n+3 for every vertex.
inline Graph build_H(const FieldSpec& f, LoopPolicy policy) {
    auto order = class_order(f);
    std::vector<std::string> labels;
    std::vector<Mat2> reps;
    labels.reserve(order.size());
    reps.reserve(order.size());
    for (const auto& cf : order) {
        labels.push_back(cf.label(f));
        reps.push_back(cf.materialize(f));
    }
    Graph g = Graph::empty(std::move(labels), policy);
    for (size_t i = 0; i < reps.size(); ++i) {
        for (size_t j = i + 1; j < reps.size(); ++j)
            if (adjacent_in_ring(reps[i], reps[j], f)) g.set(i, j, 1);
        if (policy == LoopPolicy::LoopsAllowed && order[i].nilpotent()) g.set(i, i, 1);
    }
    return g;
}

enum class SubgraphId { H1, H2, H3, H4 };

inline std::string subgraph_name(SubgraphId id) {
    switch (id) {
        case SubgraphId::H1: return "H1";
        case SubgraphId::H2: return "H2";
        case SubgraphId::H3: return "H3";
        case SubgraphId::H4: return "H4";
    }
    return "?";
}

/// Vertex positions (into class_order) of each subgraph, preserving order.
inline std::vector<size_t> subgraph_positions(const FieldSpec& f, SubgraphId id) {
    const unsigned n = f.n();
    std::vector<size_t> keep;
    // class_order block j spans S_j (5 wide) followed by T_j (n-1 wide)
    auto block_start = [&](unsigned j) { return 4 + static_cast<size_t>(j - 1) * (n + 4); };
    switch (id) {
        case SubgraphId::H1: // E/F members of every S_j
            for (unsigned j = 1; j <= n; ++j)
                for (size_t t = 0; t < 4; ++t) keep.push_back(block_start(j) + t);
            break;
        case SubgraphId::H2: // S_0 plus E/F members of every S_j
            for (size_t t = 0; t < 4; ++t) keep.push_back(t);
            for (unsigned j = 1; j <= n; ++j)
                for (size_t t = 0; t < 4; ++t) keep.push_back(block_start(j) + t);
            break;
        case SubgraphId::H3: // S_0 and all S_j
            for (size_t t = 0; t < 4; ++t) keep.push_back(t);
            for (unsigned j = 1; j <= n; ++j)
                for (size_t t = 0; t < 5; ++t) keep.push_back(block_start(j) + t);
            break;
        case SubgraphId::H4: // all T_j
            for (unsigned j = 1; j <= n; ++j)
                for (size_t t = 0; t + 1 < n; ++t) keep.push_back(block_start(j) + 5 + t);
            break;
    }
    if (keep.empty()) throw EmptySubgraph(subgraph_name(id) + " is empty at n = " + std::to_string(n));
    return keep;
}

/// Induced subgraph of H on the H1..H4 vertex families. H3 inherits the
/// nilpotent loops when H carries them; H1, H2, H4 drop the S_j nilpotents
/// but note that H2 keeps the nilpotents M, N of S_0 (and their loops).
inline Graph build_subgraph(const FieldSpec& f, SubgraphId id, LoopPolicy policy) {
    Graph h = build_H(f, policy);
    return h.induced(subgraph_positions(f, id));
}

/// H-generalized join: disjoint union of the family plus complete bipartite
/// edges between G_i and G_j whenever ij is an edge of K. Loops in K are
/// ignored (within-component structure comes from the component itself).
inline Graph generalized_join(const Graph& k, const std::vector<Graph>& family) {
    if (family.size() != k.order())
        throw SizeMismatch("join family size " + std::to_string(family.size()) +
                           " != |V(K)| = " + std::to_string(k.order()));
    std::vector<size_t> offset(family.size() + 1, 0);
    std::vector<std::string> labels;
    for (size_t i = 0; i < family.size(); ++i) {
        offset[i + 1] = offset[i] + family[i].order();
        for (const auto& l : family[i].labels) labels.push_back(l);
    }
    Graph g = Graph::empty(std::move(labels));
    for (size_t i = 0; i < family.size(); ++i)
        for (size_t a = 0; a < family[i].order(); ++a)
            for (size_t b = a + 1; b < family[i].order(); ++b)
                if (family[i].at(a, b)) g.set(offset[i] + a, offset[i] + b, 1);
    for (size_t i = 0; i < family.size(); ++i)
        for (size_t j = i + 1; j < family.size(); ++j)
            if (k.at(i, j))
                for (size_t a = 0; a < family[i].order(); ++a)
                    for (size_t b = 0; b < family[j].order(); ++b)
                        g.set(offset[i] + a, offset[j] + b, 1);
    return g;
}

/// Graph induced by Gamma on one equivalence class: null for an idempotent
/// representative, complete for a nilpotent one.
inline Graph class_induced_graph(const ZClass& cls, const FieldSpec& f) {
    std::vector<std::string> labels;
    labels.reserve(cls.members.size());
    for (const auto& m : cls.members) labels.push_back(mat_label(m, f));
    return cls.rep.nilpotent() ? Graph::complete(std::move(labels))
                               : Graph::null_graph(std::move(labels));
}

} // namespace zdg
