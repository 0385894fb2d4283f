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
 * Closed-form block patterns of the quotient graph H and its subgraphs, in
 * the canonical vertex order S_0, then (S_j, T_j) for j = 1..n.
 *
 * The adjacency of H is constant on blocks: one 4x4 pattern inside S_0, one
 * 4x5 pattern between S_0 and any S_j, one (n+4)x(n+4) pattern inside a
 * (S_j, T_j) block, and a j,k-dependent cross pattern whose only varying
 * parts are unit vectors at the T-slot of index k (resp. j). These patterns
 * both drive the reduced-matrix spectrum computations and serve as golden
 * structural claims checked against the constructed graphs.
 */

#include "zdg/exact_linalg.hpp"

namespace zdg::blocks {

inline IntMatrix from_rows(const std::vector<std::vector<int>>& rows) {
    IntMatrix m(rows.size());
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < rows.size(); ++j) m.at(i, j) = rows[i][j];
    return m;
}

/// S_0 internal adjacency (order M, N, E_0, E^0; loops at M and N).
inline IntMatrix s0_block() {
    return from_rows({{1, 0, 1, 1}, {0, 1, 1, 1}, {1, 1, 0, 1}, {1, 1, 1, 0}});
}

/// E/F part of an S_j block (order E_-1/aj, E^-aj, F^aj, F_1/aj).
inline IntMatrix ef_diag() {
    return from_rows({{0, 0, 1, 1}, {0, 0, 1, 1}, {1, 1, 0, 0}, {1, 1, 0, 0}});
}

/// E/F cross pattern between distinct S_j, S_k.
inline IntMatrix ef_cross() {
    return from_rows({{0, 0, 0, 1}, {0, 0, 1, 0}, {0, 1, 0, 0}, {1, 0, 0, 0}});
}

/// S_0 x (E/F of S_j) pattern.
inline IntMatrix s0_ef_cross() {
    return from_rows({{1, 0, 0, 1}, {0, 1, 1, 0}, {0, 1, 0, 1}, {1, 0, 1, 0}});
}

/// S_0 x S_j (all five columns; the nilpotent column is zero).
inline std::vector<std::vector<int>> s0_sj_cross_rows() {
    return {{1, 0, 0, 1, 0}, {0, 1, 1, 0, 0}, {0, 1, 0, 1, 0}, {1, 0, 1, 0, 0}};
}

/// S_j internal 5x5 (E, E, F, F, nilpotent slot with loop).
inline IntMatrix sj_diag5() {
    return from_rows({{0, 0, 1, 1, 1},
                      {0, 0, 1, 1, 1},
                      {1, 1, 0, 0, 1},
                      {1, 1, 0, 0, 1},
                      {1, 1, 1, 1, 1}});
}

/// S_j x S_k 5x5 cross pattern (nilpotent row/column zero).
inline IntMatrix sj_cross5() {
    return from_rows({{0, 0, 0, 1, 0},
                      {0, 0, 1, 0, 0},
                      {0, 1, 0, 0, 0},
                      {1, 0, 0, 0, 0},
                      {0, 0, 0, 0, 0}});
}

/// Position of index i inside T_j (i runs ascending over {1..n} minus j).
inline size_t t_slot(unsigned j, unsigned i) { return (i < j) ? i - 1 : i - 2; }

/// Full closed-form adjacency pattern of H with loops, dimension (n+2)^2.
inline IntMatrix h_pattern(unsigned n) {
    const size_t dim = static_cast<size_t>(n + 2) * (n + 2);
    const size_t bw = n + 4; // block width: 5 + (n-1)
    IntMatrix m(dim);
    auto bstart = [&](unsigned j) { return 4 + static_cast<size_t>(j - 1) * bw; };
    const IntMatrix a4 = s0_block();
    for (size_t i = 0; i < 4; ++i)
        for (size_t j = 0; j < 4; ++j) m.at(i, j) = a4.at(i, j);
    const auto b0 = s0_sj_cross_rows();
    for (unsigned k = 1; k <= n; ++k)
        for (size_t r = 0; r < 4; ++r)
            for (size_t c = 0; c < 5; ++c) {
                m.at(r, bstart(k) + c) = b0[r][c];
                m.at(bstart(k) + c, r) = b0[r][c];
            }
    const IntMatrix diag5 = sj_diag5();
    for (unsigned j = 1; j <= n; ++j) {
        const size_t o = bstart(j);
        for (size_t r = 0; r < 5; ++r)
            for (size_t c = 0; c < 5; ++c) m.at(o + r, o + c) = diag5.at(r, c);
        // rows E, E, N are joined to every member of the block's own T_j
        for (unsigned i = 1; i <= n; ++i) {
            if (i == j) continue;
            const size_t tc = o + 5 + t_slot(j, i);
            for (size_t r : {size_t(0), size_t(1), size_t(4)}) {
                m.at(o + r, tc) = 1;
                m.at(tc, o + r) = 1;
            }
        }
    }
    const IntMatrix cross5 = sj_cross5();
    for (unsigned j = 1; j <= n; ++j)
        for (unsigned k = 1; k <= n; ++k) {
            if (j == k) continue;
            const size_t oj = bstart(j), ok = bstart(k);
            for (size_t r = 0; r < 5; ++r)
                for (size_t c = 0; c < 5; ++c) m.at(oj + r, ok + c) = cross5.at(r, c);
            // F^, F_, N of S_j meet exactly the T_k member at slot of index j
            const size_t tk = ok + 5 + t_slot(k, j);
            for (size_t r : {size_t(2), size_t(3), size_t(4)}) m.at(oj + r, tk) = 1;
            // T_j member at slot of index k meets F^, F_, N of S_k
            const size_t tj = oj + 5 + t_slot(j, k);
            for (size_t c : {size_t(2), size_t(3), size_t(4)}) m.at(tj, ok + c) = 1;
            // T_j x T_k: full row at slot of k, full column at slot of j
            for (unsigned ri = 1; ri <= n; ++ri) {
                if (ri == j) continue;
                for (unsigned ci = 1; ci <= n; ++ci) {
                    if (ci == k) continue;
                    if (ri == k || ci == j)
                        m.at(oj + 5 + t_slot(j, ri), ok + 5 + t_slot(k, ci)) = 1;
                }
            }
        }
    return m;
}

inline IntMatrix pattern_on(const IntMatrix& full, const std::vector<size_t>& keep) {
    IntMatrix m(keep.size());
    for (size_t i = 0; i < keep.size(); ++i)
        for (size_t j = 0; j < keep.size(); ++j) m.at(i, j) = full.at(keep[i], keep[j]);
    return m;
}

} // namespace zdg::blocks
