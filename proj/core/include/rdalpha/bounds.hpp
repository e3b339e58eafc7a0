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

#ifndef RDALPHA_BOUNDS_HPP
#define RDALPHA_BOUNDS_HPP

#include <string>
#include <string_view>
#include <vector>

#include "rdalpha/graph.hpp"
#include "rdalpha/matrices.hpp"

namespace rdalpha {

enum class BoundKind { lower, upper };

/// Quantity a bound constrains.
enum class BoundTarget {
  spectral_radius,     // rho(RD_alpha)
  min_eigenvalue,      // lambda_n(RD_alpha)
  rq_spectral_radius,  // rho(RQ)
};

std::string_view to_string(BoundKind kind);
std::string_view to_string(BoundTarget target);

struct BoundRecord {
  std::string name;
  BoundKind kind = BoundKind::lower;
  BoundTarget target = BoundTarget::spectral_radius;
  double value = 0.0;
  /// Short formula description.
  std::string basis;
  bool applicable = true;
  /// Why the record does not apply; empty when applicable.
  std::string reason;
  /// True when the graph satisfies the bound's known equality condition.
  bool equality_expected = false;
};

/// Exact values the records are compared against.
struct SpectralTargets {
  double spectral_radius = 0.0;
  double min_eigenvalue = 0.0;
  double rq_spectral_radius = 0.0;

  double get(BoundTarget target) const;
};

SpectralTargets spectral_targets(const Graph &g, Alpha alpha);

/// lower <= actual + tol, or upper >= actual - tol. Inapplicable records hold.
bool bound_holds(const BoundRecord &record, const SpectralTargets &targets,
                 double tol = 1e-9);

/**
 * Transmission-based bounds on rho(RD_alpha) and lambda_n(RD_alpha):
 *
 *   harary_lower                  2H / n
 *   max_transmission_lower        alpha RTr_1
 *   max_transmission_upper        RTr_1
 *   min_eigenvalue_upper          lambda_n <= alpha RTr_n
 *   column_norm_upper             max_i alpha RTr_i + (1-alpha) sqrt((n-1) sum_k d_ki^-2)
 *   transmission_weighted_lower   min_i alpha RTr_i + (1-alpha) RT_i / RTr_i
 *   transmission_weighted_upper   max_i of the same, RT_i = sum_j RD_ij RTr_j
 *   rms_transmission_lower        sqrt(sum RTr_i^2 / n)
 *   sqrt_ratio_row_upper          max_i alpha RTr_i + (1-alpha) sum_j d_ij^-1 sqrt(RTr_j / RTr_i)
 *
 * Throws NotConnectedError, or InvalidArgumentError when n < 2.
 */
std::vector<BoundRecord> bound_report(const Graph &g, Alpha alpha);

/**
 * Bounds relating rho(RD_alpha) to rho(RQ), rho(RD) and RTr_1. Both alpha
 * regimes are always emitted; the one that does not cover alpha is marked
 * inapplicable. Also emits complementary_sum, the upper bound
 * rho(RD_alpha) + rho(RD_{1-alpha}) on rho(RQ).
 */
std::vector<BoundRecord> rq_relation_bounds(const Graph &g, Alpha alpha);

/// Upper bound for a connected bipartite graph with smaller part a. Throws
/// InvalidArgumentError for non-bipartite input.
BoundRecord bipartite_bound(const Graph &g, Alpha alpha);

/// bound_report, rq_relation_bounds and (for bipartite g) bipartite_bound.
std::vector<BoundRecord> full_bound_report(const Graph &g, Alpha alpha);

}  // namespace rdalpha

#endif  // RDALPHA_BOUNDS_HPP
