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

#include "rdalpha/invariants.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <queue>

#include "rdalpha/error.hpp"

namespace rdalpha {
namespace {

using Mask = std::uint32_t;

void check_budget(const Graph &g, const char *what) {
  if (g.order() > kInvariantMaxOrder)
    throw BudgetExceededError(what, g.order(), kInvariantMaxOrder);
}

std::vector<Mask> neighbor_masks(const Graph &g) {
  std::vector<Mask> nb(g.order(), 0);
  for (int v = 0; v < g.order(); ++v)
    for (int w : g.neighbors(v)) nb[v] |= Mask{1} << w;
  return nb;
}

// Is the subgraph induced by `alive` connected? (Empty counts as connected.)
bool connected_within(const std::vector<Mask> &nb, Mask alive) {
  if (alive == 0) return true;
  Mask seen = alive & (~alive + 1);
  Mask frontier = seen;
  while (frontier) {
    Mask next = 0;
    for (Mask f = frontier; f; f &= f - 1) next |= nb[std::countr_zero(f)];
    next &= alive & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen == alive;
}

// Branch and bound over candidate sets.
void grow_clique(const std::vector<Mask> &nb, Mask candidates, int size,
                 int &best) {
  if (candidates == 0) {
    best = std::max(best, size);
    return;
  }
  while (candidates) {
    if (size + std::popcount(candidates) <= best) return;
    int v = std::countr_zero(candidates);
    candidates &= candidates - 1;
    grow_clique(nb, candidates & nb[v], size + 1, best);
  }
}

int max_clique(const std::vector<Mask> &nb, int n) {
  int best = 0;
  grow_clique(nb, n == 32 ? ~Mask{0} : (Mask{1} << n) - 1, 0, best);
  return best;
}

// Tries to extend a partial coloring of order[0..pos) using at most k colors.
bool color_from(const Graph &g, const std::vector<int> &order,
                std::vector<int> &color, std::size_t pos, int k, int used) {
  if (pos == order.size()) return true;
  const int v = order[pos];
  // Colors beyond used+1 are symmetric to `used`; try at most one new color.
  const int limit = std::min(k, used + 1);
  for (int c = 0; c < limit; ++c) {
    bool ok = true;
    for (int w : g.neighbors(v))
      if (color[w] == c) {
        ok = false;
        break;
      }
    if (!ok) continue;
    color[v] = c;
    if (color_from(g, order, color, pos + 1, k, std::max(used, c + 1)))
      return true;
    color[v] = -1;
  }
  return false;
}

}  // namespace

int vertex_connectivity(const Graph &g) {
  check_budget(g, "vertex_connectivity");
  const int n = g.order();
  if (g.size() == n * (n - 1) / 2) return n - 1;
  const auto nb = neighbor_masks(g);
  const Mask all = (Mask{1} << n) - 1;
  int best = n - 1;
  for (Mask removed = 0; removed <= all; ++removed) {
    const int k = std::popcount(removed);
    if (k >= best || n - k < 2) continue;
    if (!connected_within(nb, all & ~removed)) best = k;
  }
  return best;
}

int edge_connectivity(const Graph &g) {
  check_budget(g, "edge_connectivity");
  const int n = g.order();
  if (n == 1) return 0;
  const auto nb = neighbor_masks(g);
  const Mask all = (Mask{1} << n) - 1;
  int best = g.size();
  // S always contains vertex 0 and never all of V.
  for (Mask s = 1; s < all; s += 2) {
    int cut = 0;
    for (Mask f = s; f; f &= f - 1)
      cut += std::popcount(nb[std::countr_zero(f)] & ~s & all);
    best = std::min(best, cut);
  }
  return best;
}

int clique_number(const Graph &g) {
  check_budget(g, "clique_number");
  return max_clique(neighbor_masks(g), g.order());
}

int independence_number(const Graph &g) {
  check_budget(g, "independence_number");
  return max_clique(neighbor_masks(g.complement()), g.order());
}

int chromatic_number(const Graph &g) {
  check_budget(g, "chromatic_number");
  const int n = g.order();
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return g.degree(a) > g.degree(b); });
  std::vector<int> color(n, -1);
  for (int k = std::max(1, clique_number(g));; ++k) {
    std::fill(color.begin(), color.end(), -1);
    if (color_from(g, order, color, 0, k, 0)) return k;
  }
}

std::optional<std::vector<int>> bipartition(const Graph &g) {
  const int n = g.order();
  std::vector<int> side(n, -1);
  std::queue<int> q;
  for (int s = 0; s < n; ++s) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    q.push(s);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int w : g.neighbors(v)) {
        if (side[w] < 0) {
          side[w] = 1 - side[v];
          q.push(w);
        } else if (side[w] == side[v]) {
          return std::nullopt;
        }
      }
    }
  }
  return side;
}

GraphInvariants graph_invariants(const Graph &g) {
  check_budget(g, "graph_invariants");
  if (!is_connected(g)) throw NotConnectedError();
  GraphInvariants inv;
  inv.vertex_connectivity = vertex_connectivity(g);
  inv.edge_connectivity = edge_connectivity(g);
  inv.chromatic_number = chromatic_number(g);
  inv.independence_number = independence_number(g);
  inv.min_degree = g.min_degree();
  if (auto sides = bipartition(g)) {
    inv.is_bipartite = true;
    const int ones = static_cast<int>(std::count(sides->begin(), sides->end(), 1));
    const int zeros = g.order() - ones;
    inv.part_sizes = std::make_pair(std::min(ones, zeros), std::max(ones, zeros));
  }
  return inv;
}

}  // namespace rdalpha
