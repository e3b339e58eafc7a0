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

#ifndef RDALPHA_CONSTRUCTORS_HPP
#define RDALPHA_CONSTRUCTORS_HPP

#include <span>

#include "rdalpha/graph.hpp"

// Standard graph families. Size violations throw InvalidArgumentError.
namespace rdalpha::make {

Graph complete(int n);
Graph edgeless(int n);
Graph path(int n);
Graph cycle(int n);                          // n >= 3
Graph star(int n);                           // K_{1,n-1}, n >= 2
Graph complete_bipartite(int a, int b);      // a, b >= 1
Graph complete_split(int a, int b);          // K_a join (b isolated); clique first
Graph wheel(int n);                          // hub 0, rim 1..n-1; n >= 4
Graph turan(int n, int r);                   // balanced complete r-partite
Graph complete_multipartite(std::span<const int> parts);
Graph petersen();

/// Vertices of g1 keep their labels, g2's are shifted by g1.order().
Graph disjoint_union(const Graph &g1, const Graph &g2);
/// disjoint_union plus every edge between the two sides.
Graph join(const Graph &g1, const Graph &g2);

}  // namespace rdalpha::make

#endif  // RDALPHA_CONSTRUCTORS_HPP
