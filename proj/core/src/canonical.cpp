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

#include "rdalpha/canonical.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <numeric>

#include "rdalpha/error.hpp"
#include "rdalpha/io.hpp"

namespace rdalpha {
namespace {

using Mask = std::uint32_t;
using Coloring = std::vector<int>;
using Perm = std::vector<int>;

class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Graph &g) : g_(g), n_(g.order()) {}

  Perm run() {
    Coloring initial(n_, 0);
    refine(initial);
    std::vector<int> prefix;
    search(initial, prefix);
    return best_perm_;
  }

 private:
  // Splits color classes by neighbor-color counts until stable. New colors
  // are ranks of (old color, neighbor histogram), so the result does not
  // depend on vertex labels.
  void refine(Coloring &color) const {
    std::vector<int> distinct = color;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (int &c : color)
      c = static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), c) -
                           distinct.begin());
    int classes = static_cast<int>(distinct.size());
    for (;;) {
      std::vector<std::vector<int>> key(n_);
      for (int v = 0; v < n_; ++v) {
        key[v].assign(n_ + 1, 0);
        key[v][0] = color[v];
        for (int w : g_.neighbors(v)) ++key[v][1 + color[w]];
      }
      std::vector<int> order(n_);
      std::iota(order.begin(), order.end(), 0);
      std::sort(order.begin(), order.end(),
                [&](int a, int b) { return key[a] < key[b]; });
      int rank = 0;
      for (int i = 0; i < n_; ++i) {
        if (i > 0 && key[order[i]] != key[order[i - 1]]) ++rank;
        color[order[i]] = rank;
      }
      const int now = rank + 1;
      if (now == classes) return;
      classes = now;
    }
  }

  static int count_classes(const Coloring &color) {
    return color.empty() ? 0 : *std::max_element(color.begin(), color.end()) + 1;
  }

  std::vector<Mask> certificate(const Perm &perm) const {
    std::vector<Mask> rows(n_, 0);
    for (int v = 0; v < n_; ++v)
      for (int w : g_.neighbors(v)) rows[perm[v]] |= Mask{1} << perm[w];
    return rows;
  }

  void search(const Coloring &color, std::vector<int> &prefix) {
    if (count_classes(color) == n_) {
      visit_leaf(color);
      return;
    }
    // First non-singleton cell.
    std::vector<int> size(n_, 0);
    for (int c : color) ++size[c];
    int target = 0;
    while (size[target] < 2) ++target;

    std::vector<int> cell;
    for (int v = 0; v < n_; ++v)
      if (color[v] == target) cell.push_back(v);

    std::vector<int> explored;
    for (int v : cell) {
      const std::vector<int> orbit = orbits_fixing(prefix);
      if (std::any_of(explored.begin(), explored.end(),
                      [&](int e) { return orbit[e] == orbit[v]; }))
        continue;
      explored.push_back(v);

      Coloring child(n_);
      for (int w = 0; w < n_; ++w)
        child[w] = 2 * color[w] + (color[w] == target && w != v ? 1 : 0);
      refine(child);
      prefix.push_back(v);
      search(child, prefix);
      prefix.pop_back();
    }
  }

  void visit_leaf(const Coloring &color) {
    const Perm &perm = color;
    auto cert = certificate(perm);
    if (best_perm_.empty() || cert > best_cert_) {
      best_cert_ = std::move(cert);
      best_perm_ = perm;
    } else if (cert == best_cert_) {
      // best^-1 o perm is an automorphism.
      Perm inverse_best(n_);
      for (int v = 0; v < n_; ++v) inverse_best[best_perm_[v]] = v;
      Perm gamma(n_);
      for (int v = 0; v < n_; ++v) gamma[v] = inverse_best[perm[v]];
      automorphisms_.push_back(std::move(gamma));
    }
  }

  // Orbit representative of every vertex under the known automorphisms that
  // fix each vertex of `prefix`.
  std::vector<int> orbits_fixing(const std::vector<int> &prefix) const {
    std::vector<int> parent(n_);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const Perm &gamma : automorphisms_) {
      bool fixes = std::all_of(prefix.begin(), prefix.end(),
                               [&](int p) { return gamma[p] == p; });
      if (!fixes) continue;
      for (int x = 0; x < n_; ++x) {
        int a = find(x), b = find(gamma[x]);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    }
    for (int x = 0; x < n_; ++x) parent[x] = find(x);
    return parent;
  }

  const Graph &g_;
  int n_;
  Perm best_perm_;
  std::vector<Mask> best_cert_;
  std::vector<Perm> automorphisms_;
};

void collect_small(int n, std::map<std::string, Graph> &classes) {
  std::vector<Edge> pairs;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) pairs.emplace_back(i, j);
  const std::uint64_t total = std::uint64_t{1} << pairs.size();
  std::vector<Edge> edges;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    // A connected graph needs at least n - 1 edges.
    if (std::popcount(mask) < n - 1) continue;
    edges.clear();
    for (std::size_t k = 0; k < pairs.size(); ++k)
      if (mask >> k & 1) edges.push_back(pairs[k]);
    Graph g(n, edges);
    if (!is_connected(g)) continue;
    Graph canon = canonical_graph(g);
    classes.try_emplace(to_graph6(canon), std::move(canon));
  }
}

// Every connected graph on n vertices has a non-cut vertex (a leaf of a
// spanning tree), so it arises from a connected graph on n - 1 vertices by
// attaching a new vertex to a nonempty neighbor set.
void collect_by_extension(int n, std::map<std::string, Graph> &classes) {
  for (const Graph &base : enumerate_connected_graphs(n - 1)) {
    const auto base_edges = base.edges();
    for (Mask s = 1; s < (Mask{1} << (n - 1)); ++s) {
      std::vector<Edge> edges = base_edges;
      for (int v = 0; v < n - 1; ++v)
        if (s >> v & 1) edges.emplace_back(v, n - 1);
      Graph canon = canonical_graph(Graph(n, edges));
      classes.try_emplace(to_graph6(canon), std::move(canon));
    }
  }
}

}  // namespace

std::vector<int> canonical_labeling(const Graph &g) {
  if (g.order() > kCanonicalMaxOrder)
    throw BudgetExceededError("canonical_labeling", g.order(), kCanonicalMaxOrder);
  return CanonicalSearch(g).run();
}

Graph canonical_graph(const Graph &g) { return g.relabeled(canonical_labeling(g)); }

std::string canonical_form(const Graph &g) { return to_graph6(canonical_graph(g)); }

bool are_isomorphic(const Graph &a, const Graph &b) {
  return a.order() == b.order() && a.size() == b.size() &&
         canonical_form(a) == canonical_form(b);
}

std::vector<Graph> enumerate_connected_graphs(int n) {
  if (n < 1) throw InvalidArgumentError("enumerate_connected_graphs: n must be >= 1");
  if (n > kEnumerationMaxOrder)
    throw BudgetExceededError("enumerate_connected_graphs", n, kEnumerationMaxOrder);
  std::map<std::string, Graph> classes;
  if (n <= 6)
    collect_small(n, classes);
  else
    collect_by_extension(n, classes);

  std::vector<std::pair<std::string, Graph>> sorted(classes.begin(), classes.end());
  std::stable_sort(sorted.begin(), sorted.end(), [](const auto &a, const auto &b) {
    return a.second.size() < b.second.size();
  });
  std::vector<Graph> out;
  out.reserve(sorted.size());
  for (auto &entry : sorted) out.push_back(std::move(entry.second));
  return out;
}

}  // namespace rdalpha
