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

#ifndef RDALPHA_GRAPH_HPP
#define RDALPHA_GRAPH_HPP

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace rdalpha {

using Edge = std::pair<int, int>;

/**
 * Immutable simple undirected graph on vertices 0..n-1.
 *
 * Adjacency is kept both as a dense n*n byte matrix (O(1) queries) and as
 * sorted neighbor lists (BFS, degree). Every "modifying" member returns a
 * new graph.
 */
class Graph {
 public:
  /// Edgeless graph on n >= 1 vertices.
  explicit Graph(int n);

  /// Throws InvalidArgumentError on loops, out-of-range endpoints or
  /// duplicate edges.
  Graph(int n, std::span<const Edge> edges);

  int order() const noexcept { return n_; }
  int size() const noexcept { return m_; }

  bool adjacent(int u, int v) const {
    return adj_[static_cast<std::size_t>(u) * n_ + v] != 0;
  }
  std::span<const int> neighbors(int v) const { return nbrs_[v]; }
  int degree(int v) const { return static_cast<int>(nbrs_[v].size()); }
  int min_degree() const;

  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  Graph with_edge(int u, int v) const;
  Graph without_edge(int u, int v) const;
  Graph complement() const;

  /// Vertex v of this graph becomes vertex perm[v] of the result.
  Graph relabeled(std::span<const int> perm) const;

  /// Subgraph induced by `vertices`; vertex vertices[i] becomes i.
  Graph induced(std::span<const int> vertices) const;

  friend bool operator==(const Graph &a, const Graph &b) {
    return a.n_ == b.n_ && a.adj_ == b.adj_;
  }

 private:
  void rebuild_lists();

  int n_;
  int m_ = 0;
  std::vector<std::uint8_t> adj_;
  std::vector<std::vector<int>> nbrs_;
};

bool is_connected(const Graph &g);

}  // namespace rdalpha

#endif  // RDALPHA_GRAPH_HPP
