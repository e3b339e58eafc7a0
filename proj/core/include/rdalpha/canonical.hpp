// Copyright 2026 The rdalpha Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef RDALPHA_CANONICAL_HPP
#define RDALPHA_CANONICAL_HPP

#include <string>
#include <vector>

#include "rdalpha/graph.hpp"

namespace rdalpha {

inline constexpr int kCanonicalMaxOrder = 10;
inline constexpr int kEnumerationMaxOrder = 8;

/**
 * Canonical relabeling by individualization-refinement.
 *
 * Colors are refined to the coarsest equitable partition; the first
 * non-singleton cell is split by individualizing each of its vertices in
 * turn, skipping vertices in the same orbit (under automorphisms already
 * discovered that fix the current prefix) as one already explored. The
 * canonical labeling is the leaf whose relabeled adjacency is largest.
 *
 * Returns perm with perm[v] = canonical label of v.
 */
std::vector<int> canonical_labeling(const Graph &g);

/// g relabeled by canonical_labeling.
Graph canonical_graph(const Graph &g);

/// graph6 string of canonical_graph(g); equal iff the graphs are isomorphic.
std::string canonical_form(const Graph &g);

bool are_isomorphic(const Graph &a, const Graph &b);

/**
 * One representative per isomorphism class of connected graphs on n
 * vertices (1 <= n <= 8), each already in canonical labeling, ordered by
 * edge count and then by canonical form.
 */
std::vector<Graph> enumerate_connected_graphs(int n);

}  // namespace rdalpha

#endif  // RDALPHA_CANONICAL_HPP
