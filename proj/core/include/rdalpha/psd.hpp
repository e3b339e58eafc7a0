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

#ifndef RDALPHA_PSD_HPP
#define RDALPHA_PSD_HPP

#include <string>
#include <string_view>

#include "rdalpha/graph.hpp"

namespace rdalpha {

enum class PsdMethod { bisection, closed_form };
std::string_view to_string(PsdMethod method);

/// Smallest alpha0 such that RD_alpha is positive semidefinite for all
/// alpha >= alpha0.
struct PsdThreshold {
  double alpha0 = 0.0;
  PsdMethod method = PsdMethod::bisection;
  /// |lambda_min(RD_alpha0)| where computed, otherwise 0.
  double residual = 0.0;
  std::string note;
};

/// lambda_min(RD_alpha(g)).
double min_eigenvalue(const Graph &g, double alpha);

/**
 * Bisection on alpha -> lambda_min(RD_alpha) over [0, 1/2] until the bracket
 * is narrower than tol (at most 60 halvings). Returns alpha0 = 0 with a note
 * when RD is already PSD (only K_1). Throws ConvergenceError if
 * lambda_min(RD_{1/2}) is negative beyond rounding.
 */
PsdThreshold alpha0_bisection(const Graph &g, double tol = 1e-12);

/// -lambda_min(RD) / (k - lambda_min(RD)) for a graph whose reciprocal
/// transmissions all equal k. Throws InvalidArgumentError otherwise.
PsdThreshold alpha0_transmission_regular(const Graph &g);

/// (n - 1 + 3a(n-a)) / (2n(n-1) + 4a(n-a)) for K_{a,n-a}; n >= 4,
/// 1 <= a <= n/2.
PsdThreshold alpha0_complete_bipartite(int a, int n);

/// Wheel on n >= 4 vertices: 3/(n+5) for odd n, otherwise
/// (1 - 2cos(2k pi/(2k+1))) / (n + 3 - 2cos(2k pi/(2k+1))) with n = 2k+2.
PsdThreshold alpha0_wheel(int n);

}  // namespace rdalpha

#endif  // RDALPHA_PSD_HPP
