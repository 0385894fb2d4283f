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

// Deterministic graph serialization: edge list, DOT, Matrix Market.

#include <sstream>
#include <string>

#include "zdg/graph.hpp"

namespace zdg {

/// "u v" per line, 0-indexed, i <= j, ascending.
inline std::string to_edge_list(const Graph& g) {
    std::ostringstream os;
    for (size_t i = 0; i < g.order(); ++i)
        for (size_t j = i; j < g.order(); ++j)
            if (g.at(i, j)) os << i << " " << j << "\n";
    return os.str();
}

/// Undirected DOT with canonical-form labels.
inline std::string to_dot(const Graph& g, const std::string& name = "G") {
    std::ostringstream os;
    os << "graph " << name << " {\n";
    for (size_t i = 0; i < g.order(); ++i)
        os << "  v" << i << " [label=\"" << g.labels[i] << "\"];\n";
    for (size_t i = 0; i < g.order(); ++i)
        for (size_t j = i; j < g.order(); ++j)
            if (g.at(i, j)) os << "  v" << i << " -- v" << j << ";\n";
    os << "}\n";
    return os.str();
}

/// Matrix Market, symmetric coordinate pattern, 1-indexed lower triangle.
inline std::string to_matrix_market(const Graph& g) {
    std::ostringstream os;
    os << "%%MatrixMarket matrix coordinate pattern symmetric\n";
    size_t nnz = 0;
    for (size_t i = 0; i < g.order(); ++i)
        for (size_t j = 0; j <= i; ++j)
            if (g.at(i, j)) ++nnz;
    os << g.order() << " " << g.order() << " " << nnz << "\n";
    for (size_t i = 0; i < g.order(); ++i)
        for (size_t j = 0; j <= i; ++j)
            if (g.at(i, j)) os << (i + 1) << " " << (j + 1) << "\n";
    return os.str();
}

} // namespace zdg
