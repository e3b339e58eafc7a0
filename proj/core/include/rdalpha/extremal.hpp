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

#ifndef RDALPHA_EXTREMAL_HPP
#define RDALPHA_EXTREMAL_HPP

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "rdalpha/graph.hpp"
#include "rdalpha/invariants.hpp"
#include "rdalpha/matrices.hpp"

namespace rdalpha {

/// Spectral radii within this distance of the maximum count as maximizers.
inline constexpr double kTieTol = 1e-9;

/// K_r join (K_1 + K_{n-r-1}); 1 <= r <= n - 2.
Graph build_kite(int n, int r);

/// Upper bound on rho(RD_alpha) over connected graphs on n vertices with
/// independence number k, attained by k isolated vertices joined with
/// K_{n-k}. Requires 1 <= k <= n - 1.
double independence_bound(int n, int k, Alpha alpha);

enum class Constraint {
  vertex_connectivity,
  edge_connectivity,
  chromatic_number,
  independence_number,
};

/// "vertex-connectivity", "edge-connectivity", "chromatic-number",
/// "independence-number".
std::string_view to_string(Constraint c);
/// Accepts the names above; throws InvalidArgumentError otherwise.
Constraint parse_constraint(std::string_view name);

enum class Verdict { confirmed, refuted, tie };
std::string_view to_string(Verdict v);

struct CatalogEntry {
  Graph graph;
  std::string canonical;
  GraphInvariants invariants;
};

/// Lazily enumerated connected graphs of each order with their invariants.
/// Not thread-safe.
class GraphCatalog {
 public:
  /// Throws BudgetExceededError above kEnumerationMaxOrder.
  const std::vector<CatalogEntry> &graphs(int n);

 private:
  std::map<int, std::vector<CatalogEntry>> cache_;
};

struct ExtremalReport {
  int n = 0;
  Constraint constraint = Constraint::vertex_connectivity;
  int value = 0;
  double alpha = 0.0;
  /// Set when alpha lies outside the range the predicted graph is known for.
  bool exploratory = false;
  int class_size = 0;
  double rho_max = 0.0;
  /// Canonical graph6 strings of every graph within kTieTol of rho_max.
  std::vector<std::string> maximizers;
  /// rho_max minus the best spectral radius outside the maximizers; +inf if
  /// the class has no other graph.
  double runner_up_gap = 0.0;
  std::string predicted;
  Verdict verdict = Verdict::refuted;
  /// Independence constraint only: the closed-form upper bound, the number
  /// of graphs exceeding it by more than kTieTol, and the graphs attaining it.
  double bound = 0.0;
  int bound_violations = 0;
  std::vector<std::string> bound_attained_by;
};

/// Connected graphs with vertex connectivity r; predicted maximizer the kite.
ExtremalReport verify_vertex_connectivity_extremal(GraphCatalog &catalog, int n, int r,
                                                   Alpha alpha);
/// Same with edge connectivity r.
ExtremalReport verify_edge_connectivity_extremal(GraphCatalog &catalog, int n, int r,
                                                 Alpha alpha);
/// Connected graphs with chromatic number chi; predicted maximizer the Turan
/// graph T_{n,chi}. Reports with alpha > 7/16 are marked exploratory.
ExtremalReport verify_chromatic_extremal(GraphCatalog &catalog, int n, int chi,
                                         Alpha alpha);
/// Connected graphs with independence number k; confirmed iff no graph
/// exceeds independence_bound and only k isolated vertices joined with
/// K_{n-k} attains it.
ExtremalReport verify_independence_extremal(GraphCatalog &catalog, int n, int k,
                                            Alpha alpha);

/// Dispatches on the constraint.
ExtremalReport verify_extremal(GraphCatalog &catalog, Constraint constraint, int n,
                               int value, Alpha alpha);

}  // namespace rdalpha

#endif  // RDALPHA_EXTREMAL_HPP
