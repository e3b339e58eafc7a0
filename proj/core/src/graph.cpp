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

#include "rdalpha/graph.hpp"

#include <algorithm>
#include <string>

#include "rdalpha/error.hpp"

namespace rdalpha {

Graph::Graph(int n) : n_(n) {
  if (n < 1) throw InvalidArgumentError("graph order must be positive");
  adj_.assign(static_cast<std::size_t>(n) * n, 0);
  nbrs_.resize(n);
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
  for (const auto &[u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw InvalidArgumentError("edge endpoint out of range: " +
                                 std::to_string(u) + " " + std::to_string(v));
    if (u == v)
      throw InvalidArgumentError("self-loop at vertex " + std::to_string(u));
    auto &cell = adj_[static_cast<std::size_t>(u) * n + v];
    if (cell)
      throw InvalidArgumentError("duplicate edge " + std::to_string(u) + " " +
                                 std::to_string(v));
    cell = 1;
    adj_[static_cast<std::size_t>(v) * n + u] = 1;
  }
  rebuild_lists();
}

void Graph::rebuild_lists() {
  m_ = 0;
  for (int u = 0; u < n_; ++u) {
    nbrs_[u].clear();
    for (int v = 0; v < n_; ++v)
      if (adjacent(u, v)) nbrs_[u].push_back(v);
    m_ += static_cast<int>(nbrs_[u].size());
  }
  m_ /= 2;
}

int Graph::min_degree() const {
  int best = n_;
  for (int v = 0; v < n_; ++v) best = std::min(best, degree(v));
  return best;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (int u = 0; u < n_; ++u)
    for (int v : nbrs_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

Graph Graph::with_edge(int u, int v) const {
  if (u == v || adjacent(u, v))
    throw InvalidArgumentError("with_edge: not a non-edge");
  Graph g = *this;
  g.adj_[static_cast<std::size_t>(u) * n_ + v] = 1;
  g.adj_[static_cast<std::size_t>(v) * n_ + u] = 1;
  g.rebuild_lists();
  return g;
}

Graph Graph::without_edge(int u, int v) const {
  if (!adjacent(u, v)) throw InvalidArgumentError("without_edge: not an edge");
  Graph g = *this;
  g.adj_[static_cast<std::size_t>(u) * n_ + v] = 0;
  g.adj_[static_cast<std::size_t>(v) * n_ + u] = 0;
  g.rebuild_lists();
  return g;
}

Graph Graph::complement() const {
  Graph g(n_);
  for (int u = 0; u < n_; ++u)
    for (int v = 0; v < n_; ++v)
      if (u != v && !adjacent(u, v))
        g.adj_[static_cast<std::size_t>(u) * n_ + v] = 1;
  g.rebuild_lists();
  return g;
}

Graph Graph::relabeled(std::span<const int> perm) const {
  if (static_cast<int>(perm.size()) != n_)
    throw InvalidArgumentError("relabeled: permutation size mismatch");
  Graph g(n_);
  for (int u = 0; u < n_; ++u)
    for (int v : nbrs_[u])
      g.adj_[static_cast<std::size_t>(perm[u]) * n_ + perm[v]] = 1;
  g.rebuild_lists();
  return g;
}

Graph Graph::induced(std::span<const int> vertices) const {
  const int k = static_cast<int>(vertices.size());
  Graph g(k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (i != j && adjacent(vertices[i], vertices[j]))
        g.adj_[static_cast<std::size_t>(i) * k + j] = 1;
  g.rebuild_lists();
  return g;
}

bool is_connected(const Graph &g) {
  const int n = g.order();
  std::vector<char> seen(n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : g.neighbors(v))
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
  }
  return count == n;
}

}  // namespace rdalpha
