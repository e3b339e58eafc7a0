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

#ifndef RDALPHA_INVARIANTS_HPP
#define RDALPHA_INVARIANTS_HPP

#include <optional>
#include <utility>
#include <vector>

#include "rdalpha/graph.hpp"

namespace rdalpha {

/// Order limit of the exact (exponential) invariant algorithms below.
inline constexpr int kInvariantMaxOrder = 10;

struct GraphInvariants {
  int vertex_connectivity = 0;
  int edge_connectivity = 0;
  int chromatic_number = 0;
  int independence_number = 0;
  int min_degree = 0;
  bool is_bipartite = false;
  /// (smaller part, larger part) when bipartite.
  std::optional<std::pair<int, int>> part_sizes;
};

// Each of these throws BudgetExceededError above kInvariantMaxOrder.

/// Smallest vertex set whose removal disconnects g; n - 1 for K_n.
int vertex_connectivity(const Graph &g);
/// Smallest edge cut [S, V \ S] over nonempty proper S.
int edge_connectivity(const Graph &g);
int chromatic_number(const Graph &g);
int independence_number(const Graph &g);
int clique_number(const Graph &g);

/// Side (0/1) of each vertex in a proper 2-coloring, or nullopt if g has an
/// odd cycle. Vertex 0 is always on side 0.
std::optional<std::vector<int>> bipartition(const Graph &g);

/// All of the above for a connected graph.
GraphInvariants graph_invariants(const Graph &g);

}  // namespace rdalpha

#endif  // RDALPHA_INVARIANTS_HPP
