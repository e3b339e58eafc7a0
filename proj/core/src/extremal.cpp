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

#include "rdalpha/extremal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "rdalpha/canonical.hpp"
#include "rdalpha/constructors.hpp"
#include "rdalpha/eigen.hpp"
#include "rdalpha/error.hpp"

namespace rdalpha {
namespace {

void require_order(int n) {
  if (n < 1) throw InvalidArgumentError("order must be positive");
  if (n > kEnumerationMaxOrder)
    throw BudgetExceededError("exhaustive search", n, kEnumerationMaxOrder);
}

int invariant_of(const GraphInvariants &inv, Constraint c) {
  switch (c) {
    case Constraint::vertex_connectivity: return inv.vertex_connectivity;
    case Constraint::edge_connectivity: return inv.edge_connectivity;
    case Constraint::chromatic_number: return inv.chromatic_number;
    case Constraint::independence_number: return inv.independence_number;
  }
  return -1;
}

struct Scored {
  const CatalogEntry *entry;
  double rho;
};

// Shared search: filters the class, ranks by spectral radius and fills the
// maximizer fields. The verdict compares a unique maximizer with `predicted`.
ExtremalReport search(GraphCatalog &catalog, Constraint constraint, int n, int value,
                      Alpha alpha, const Graph &predicted, std::vector<Scored> *scored_out) {
  const std::vector<CatalogEntry> &all = catalog.graphs(n);
  std::vector<Scored> scored;
  for (const CatalogEntry &e : all)
    if (invariant_of(e.invariants, constraint) == value)
      scored.push_back({&e, spectral_radius(e.graph, alpha)});
  if (scored.empty())
    throw InvalidArgumentError("no connected graph on " + std::to_string(n) +
                               " vertices has " + std::string(to_string(constraint)) + " " +
                               std::to_string(value));

  ExtremalReport r;
  r.n = n;
  r.constraint = constraint;
  r.value = value;
  r.alpha = alpha.value();
  r.class_size = static_cast<int>(scored.size());
  r.predicted = canonical_form(predicted);

  double best = -std::numeric_limits<double>::infinity();
  for (const Scored &s : scored) best = std::max(best, s.rho);
  r.rho_max = best;
  double runner = -std::numeric_limits<double>::infinity();
  for (const Scored &s : scored) {
    if (best - s.rho <= kTieTol)
      r.maximizers.push_back(s.entry->canonical);
    else
      runner = std::max(runner, s.rho);
  }
  std::sort(r.maximizers.begin(), r.maximizers.end());
  r.runner_up_gap = best - runner;

  if (r.maximizers.size() > 1)
    r.verdict = Verdict::tie;
  else
    r.verdict = r.maximizers.front() == r.predicted ? Verdict::confirmed : Verdict::refuted;
  if (scored_out) *scored_out = std::move(scored);
  return r;
}

void require_below_one(Alpha alpha) { alpha.require_below_one("extremal search"); }

}  // namespace

Graph build_kite(int n, int r) {
  if (r < 1 || r > n - 2) throw InvalidArgumentError("build_kite: need 1 <= r <= n - 2");
  return make::join(make::complete(r),
                    make::disjoint_union(make::complete(1), make::complete(n - r - 1)));
}

double independence_bound(int n, int k, Alpha alpha) {
  if (k < 1 || k > n - 1) throw InvalidArgumentError("independence_bound: need 1 <= k <= n-1");
  const double a = alpha.value(), c = alpha.complement();
  const double lin = c * n + 2 * a * k - 1.5 * k - 0.5;
  const double disc = lin * lin + 4 * c * c * k * (n - k);
  return 0.5 * ((1 + a) * n - 0.5 * k - 1.5 + std::sqrt(disc));
}

std::string_view to_string(Constraint c) {
  switch (c) {
    case Constraint::vertex_connectivity: return "vertex-connectivity";
    case Constraint::edge_connectivity: return "edge-connectivity";
    case Constraint::chromatic_number: return "chromatic-number";
    case Constraint::independence_number: return "independence-number";
  }
  return "unknown";
}

Constraint parse_constraint(std::string_view name) {
  for (Constraint c : {Constraint::vertex_connectivity, Constraint::edge_connectivity,
                       Constraint::chromatic_number, Constraint::independence_number})
    if (name == to_string(c)) return c;
  throw InvalidArgumentError("unknown constraint: " + std::string(name));
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::confirmed: return "confirmed";
    case Verdict::refuted: return "refuted";
    case Verdict::tie: return "tie";
  }
  return "unknown";
}

const std::vector<CatalogEntry> &GraphCatalog::graphs(int n) {
  require_order(n);
  auto it = cache_.find(n);
  if (it != cache_.end()) return it->second;
  std::vector<CatalogEntry> entries;
  for (Graph &g : enumerate_connected_graphs(n)) {
    CatalogEntry e{g, canonical_form(g), graph_invariants(g)};
    entries.push_back(std::move(e));
  }
  return cache_.emplace(n, std::move(entries)).first->second;
}

ExtremalReport verify_vertex_connectivity_extremal(GraphCatalog &catalog, int n, int r,
                                                   Alpha alpha) {
  require_order(n);
  require_below_one(alpha);
  return search(catalog, Constraint::vertex_connectivity, n, r, alpha, build_kite(n, r),
                nullptr);
}

ExtremalReport verify_edge_connectivity_extremal(GraphCatalog &catalog, int n, int r,
                                                 Alpha alpha) {
  require_order(n);
  require_below_one(alpha);
  return search(catalog, Constraint::edge_connectivity, n, r, alpha, build_kite(n, r),
                nullptr);
}

ExtremalReport verify_chromatic_extremal(GraphCatalog &catalog, int n, int chi,
                                         Alpha alpha) {
  require_order(n);
  require_below_one(alpha);
  if (chi < 2 || chi > n) throw InvalidArgumentError("chromatic number must lie in [2, n]");
  ExtremalReport r = search(catalog, Constraint::chromatic_number, n, chi, alpha,
                            make::turan(n, chi), nullptr);
  r.exploratory = alpha.value() > 7.0 / 16.0;
  return r;
}

ExtremalReport verify_independence_extremal(GraphCatalog &catalog, int n, int k,
                                            Alpha alpha) {
  require_order(n);
  require_below_one(alpha);
  if (k < 1 || k > n - 1) throw InvalidArgumentError("independence number must lie in [1, n-1]");
  std::vector<Scored> scored;
  ExtremalReport r =
      search(catalog, Constraint::independence_number, n, k, alpha,
             make::join(make::edgeless(k), make::complete(n - k)), &scored);
  r.bound = independence_bound(n, k, alpha);
  for (const Scored &s : scored) {
    if (s.rho > r.bound + kTieTol) ++r.bound_violations;
    if (std::abs(s.rho - r.bound) <= kTieTol) r.bound_attained_by.push_back(s.entry->canonical);
  }
  std::sort(r.bound_attained_by.begin(), r.bound_attained_by.end());
  const bool exact = r.bound_attained_by.size() == 1 && r.bound_attained_by[0] == r.predicted;
  r.verdict = r.bound_violations == 0 && exact ? Verdict::confirmed : Verdict::refuted;
  return r;
}

ExtremalReport verify_extremal(GraphCatalog &catalog, Constraint constraint, int n,
                               int value, Alpha alpha) {
  switch (constraint) {
    case Constraint::vertex_connectivity:
      return verify_vertex_connectivity_extremal(catalog, n, value, alpha);
    case Constraint::edge_connectivity:
      return verify_edge_connectivity_extremal(catalog, n, value, alpha);
    case Constraint::chromatic_number:
      return verify_chromatic_extremal(catalog, n, value, alpha);
    case Constraint::independence_number:
      return verify_independence_extremal(catalog, n, value, alpha);
  }
  throw InvalidArgumentError("unknown constraint");
}

}  // namespace rdalpha
