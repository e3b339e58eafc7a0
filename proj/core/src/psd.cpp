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

#include "rdalpha/psd.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "rdalpha/distances.hpp"
#include "rdalpha/eigen.hpp"
#include "rdalpha/error.hpp"
#include "rdalpha/matrices.hpp"

namespace rdalpha {

std::string_view to_string(PsdMethod method) {
  return method == PsdMethod::bisection ? "bisection" : "closed_form";
}

double min_eigenvalue(const Graph &g, double alpha) {
  return sym_eigen(rd_alpha(g, Alpha(alpha))).smallest();
}

PsdThreshold alpha0_bisection(const Graph &g, double tol) {
  if (!(tol >= 1e-12)) throw InvalidArgumentError("alpha0_bisection: tol must be >= 1e-12");
  const MatrixBundle b = build_bundle(g);
  auto f = [&](double a) { return sym_eigen(rd_alpha(b, Alpha(a))).smallest(); };

  const double f0 = f(0.0);
  if (f0 >= 0.0) return {0.0, PsdMethod::bisection, std::abs(f0), "already PSD at 0"};

  const double scale = std::max(1.0, b.rq.max_abs());
  const double slack = 1e-12 * scale;
  const double fh = f(0.5);
  if (fh < -slack)
    throw ConvergenceError("alpha0_bisection: RD_{1/2} has a negative eigenvalue", fh);

  double lo = 0.0, hi = 0.5;
  for (int it = 0; it < 60 && hi - lo > tol; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (f(mid) >= 0.0)
      hi = mid;
    else
      lo = mid;
  }
  return {hi, PsdMethod::bisection, std::abs(f(hi)), ""};
}

PsdThreshold alpha0_transmission_regular(const Graph &g) {
  if (g.order() < 2)
    throw InvalidArgumentError("alpha0_transmission_regular: graph needs two vertices");
  if (!is_transmission_regular(g, 1e-8))
    throw InvalidArgumentError("alpha0_transmission_regular: graph not transmission regular");
  const MatrixBundle b = build_bundle(g);
  const double lmin = sym_eigen(b.rd).smallest();
  const double k = b.transmissions.front();
  const double a0 = -lmin / (k - lmin);
  return {a0, PsdMethod::closed_form, std::abs(sym_eigen(rd_alpha(b, Alpha(a0))).smallest()),
          "transmission regular"};
}

PsdThreshold alpha0_complete_bipartite(int a, int n) {
  if (n < 4 || a < 1 || 2 * a > n)
    throw InvalidArgumentError("alpha0_complete_bipartite: need n >= 4 and 1 <= a <= n/2");
  const double p = static_cast<double>(a) * (n - a);
  return {(n - 1 + 3 * p) / (2.0 * n * (n - 1) + 4 * p), PsdMethod::closed_form, 0.0,
          "complete bipartite"};
}

PsdThreshold alpha0_wheel(int n) {
  if (n < 4) throw InvalidArgumentError("alpha0_wheel: n must be >= 4");
  if (n % 2 == 1) return {3.0 / (n + 5), PsdMethod::closed_form, 0.0, "wheel, odd order"};
  const int k = (n - 2) / 2;
  const double c = 2 * std::cos(2 * k * std::numbers::pi / (2 * k + 1));
  return {(1 - c) / (n + 3 - c), PsdMethod::closed_form, 0.0, "wheel, even order"};
}

}  // namespace rdalpha
