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

#include "rdalpha/constructors.hpp"

#include <string>
#include <vector>

#include "rdalpha/error.hpp"

namespace rdalpha::make {
namespace {

void require(bool ok, const std::string &what) {
  if (!ok) throw InvalidArgumentError(what);
}

}  // namespace

Graph complete(int n) {
  require(n >= 1, "complete: n must be >= 1");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return Graph(n, edges);
}

Graph edgeless(int n) {
  require(n >= 1, "edgeless: n must be >= 1");
  return Graph(n);
}

Graph path(int n) {
  require(n >= 1, "path: n must be >= 1");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph(n, edges);
}

Graph cycle(int n) {
  require(n >= 3, "cycle: n must be >= 3");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph(n, edges);
}

Graph star(int n) {
  require(n >= 2, "star: n must be >= 2");
  return complete_bipartite(1, n - 1);
}

Graph complete_bipartite(int a, int b) {
  require(a >= 1 && b >= 1, "complete_bipartite: parts must be >= 1");
  return join(edgeless(a), edgeless(b));
}

Graph complete_split(int a, int b) {
  require(a >= 1 && b >= 1, "complete_split: a, b must be >= 1");
  return join(complete(a), edgeless(b));
}

Graph wheel(int n) {
  require(n >= 4, "wheel: n must be >= 4");
  return join(complete(1), cycle(n - 1));
}

Graph turan(int n, int r) {
  require(r >= 1 && r <= n, "turan: need 1 <= r <= n");
  std::vector<int> parts(r, n / r);
  for (int i = 0; i < n % r; ++i) ++parts[i];
  return complete_multipartite(parts);
}

Graph complete_multipartite(std::span<const int> parts) {
  require(!parts.empty(), "complete_multipartite: no parts");
  std::vector<int> part_of;
  for (std::size_t p = 0; p < parts.size(); ++p) {
    require(parts[p] >= 1, "complete_multipartite: parts must be >= 1");
    part_of.insert(part_of.end(), parts[p], static_cast<int>(p));
  }
  const int n = static_cast<int>(part_of.size());
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (part_of[i] != part_of[j]) edges.emplace_back(i, j);
  return Graph(n, edges);
}

Graph petersen() {
  std::vector<Edge> edges;
  for (int i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);          // outer cycle
    edges.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
    edges.emplace_back(i, 5 + i);                // spokes
  }
  return Graph(10, edges);
}

Graph disjoint_union(const Graph &g1, const Graph &g2) {
  const int n1 = g1.order();
  std::vector<Edge> edges = g1.edges();
  for (const auto &[u, v] : g2.edges()) edges.emplace_back(u + n1, v + n1);
  return Graph(n1 + g2.order(), edges);
}

Graph join(const Graph &g1, const Graph &g2) {
  const int n1 = g1.order();
  std::vector<Edge> edges = disjoint_union(g1, g2).edges();
  for (int u = 0; u < n1; ++u)
    for (int v = 0; v < g2.order(); ++v) edges.emplace_back(u, n1 + v);
  return Graph(n1 + g2.order(), edges);
}

}  // namespace rdalpha::make
