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

#include "rdalpha/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "rdalpha/eigen.hpp"
#include "rdalpha/error.hpp"
#include "rdalpha/invariants.hpp"

namespace rdalpha {
namespace {

constexpr double kRegularTol = 1e-8;

bool constant(const std::vector<double> &v) {
  const auto [lo, hi] = std::minmax_element(v.begin(), v.end());
  return *hi - *lo <= kRegularTol * std::max(1.0, *hi);
}

BoundRecord make(std::string name, BoundKind kind, double value, std::string basis,
                 BoundTarget target = BoundTarget::spectral_radius) {
  BoundRecord r;
  r.name = std::move(name);
  r.kind = kind;
  r.target = target;
  r.value = value;
  r.basis = std::move(basis);
  return r;
}

void mark_inapplicable(BoundRecord &r, std::string reason) {
  r.applicable = false;
  r.reason = std::move(reason);
}

}  // namespace

std::string_view to_string(BoundKind kind) {
  return kind == BoundKind::lower ? "lower" : "upper";
}

std::string_view to_string(BoundTarget target) {
  switch (target) {
    case BoundTarget::spectral_radius: return "spectral_radius";
    case BoundTarget::min_eigenvalue: return "min_eigenvalue";
    case BoundTarget::rq_spectral_radius: return "rq_spectral_radius";
  }
  return "unknown";
}

double SpectralTargets::get(BoundTarget target) const {
  switch (target) {
    case BoundTarget::spectral_radius: return spectral_radius;
    case BoundTarget::min_eigenvalue: return min_eigenvalue;
    case BoundTarget::rq_spectral_radius: return rq_spectral_radius;
  }
  return 0.0;
}

SpectralTargets spectral_targets(const Graph &g, Alpha alpha) {
  const MatrixBundle b = build_bundle(g);
  const Spectrum s = sym_eigen(rd_alpha(b, alpha));
  return {s.largest(), s.smallest(), sym_eigen(b.rq).largest()};
}

bool bound_holds(const BoundRecord &record, const SpectralTargets &targets, double tol) {
  if (!record.applicable) return true;
  const double actual = targets.get(record.target);
  return record.kind == BoundKind::lower ? record.value <= actual + tol
                                         : record.value >= actual - tol;
}

std::vector<BoundRecord> bound_report(const Graph &g, Alpha alpha) {
  const int n = g.order();
  if (n < 2) throw InvalidArgumentError("bound_report: graph needs at least two vertices");
  const MatrixBundle b = build_bundle(g);
  const std::vector<double> &rtr = b.transmissions;
  const double a = alpha.value(), c = alpha.complement();
  const double rtr1 = *std::max_element(rtr.begin(), rtr.end());
  const double rtrn = *std::min_element(rtr.begin(), rtr.end());
  const double sum = std::accumulate(rtr.begin(), rtr.end(), 0.0);
  const bool regular = constant(rtr);

  std::vector<BoundRecord> out;

  BoundRecord harary = make("harary_lower", BoundKind::lower, sum / n, "2H / n");
  harary.equality_expected = regular;
  out.push_back(harary);

  out.push_back(make("max_transmission_lower", BoundKind::lower, a * rtr1, "alpha RTr_1"));
  out.push_back(make("max_transmission_upper", BoundKind::upper, rtr1, "RTr_1"));
  out.push_back(make("min_eigenvalue_upper", BoundKind::upper, a * rtrn, "alpha RTr_n",
                     BoundTarget::min_eigenvalue));

  double column = -INFINITY;
  for (int i = 0; i < n; ++i) {
    double sq = 0.0;
    for (int k = 0; k < n; ++k)
      if (k != i) sq += b.rd(k, i) * b.rd(k, i);
    column = std::max(column, a * rtr[i] + c * std::sqrt((n - 1) * sq));
  }
  BoundRecord col = make("column_norm_upper", BoundKind::upper, column,
                         "max_i alpha RTr_i + (1-alpha) sqrt((n-1) sum_k RD_ki^2)");
  if (!(a < 1.0)) mark_inapplicable(col, "requires alpha < 1");
  out.push_back(col);

  double wlo = INFINITY, whi = -INFINITY;
  for (int i = 0; i < n; ++i) {
    double rt = 0.0;
    for (int j = 0; j < n; ++j) rt += b.rd(i, j) * rtr[j];
    const double w = a * rtr[i] + c * rt / rtr[i];
    wlo = std::min(wlo, w);
    whi = std::max(whi, w);
  }
  BoundRecord wl = make("transmission_weighted_lower", BoundKind::lower, wlo,
                        "min_i alpha RTr_i + (1-alpha) RT_i / RTr_i");
  BoundRecord wu = make("transmission_weighted_upper", BoundKind::upper, whi,
                        "max_i alpha RTr_i + (1-alpha) RT_i / RTr_i");
  wl.equality_expected = wu.equality_expected = regular && a >= 0.5;
  out.push_back(wl);
  out.push_back(wu);

  double sq = 0.0;
  for (double t : rtr) sq += t * t;
  BoundRecord rms = make("rms_transmission_lower", BoundKind::lower, std::sqrt(sq / n),
                         "sqrt(sum_i RTr_i^2 / n)");
  rms.equality_expected = regular;
  out.push_back(rms);

  double ratio = -INFINITY;
  for (int i = 0; i < n; ++i) {
    double s = 0.0;
    for (int j = 0; j < n; ++j)
      if (j != i) s += b.rd(i, j) * std::sqrt(rtr[j] / rtr[i]);
    ratio = std::max(ratio, a * rtr[i] + c * s);
  }
  BoundRecord sr = make("sqrt_ratio_row_upper", BoundKind::upper, ratio,
                        "max_i alpha RTr_i + (1-alpha) sum_j RD_ij sqrt(RTr_j / RTr_i)");
  sr.equality_expected = regular;
  out.push_back(sr);
  return out;
}

std::vector<BoundRecord> rq_relation_bounds(const Graph &g, Alpha alpha) {
  const MatrixBundle b = build_bundle(g);
  const double a = alpha.value();
  const double rq = sym_eigen(b.rq).largest();
  const double rd = sym_eigen(b.rd).largest();
  const double rtr1 = *std::max_element(b.transmissions.begin(), b.transmissions.end());
  const double mixed = (1 - a) * rq + (2 * a - 1) * rtr1;
  const double blend = a * rq + (1 - 2 * a) * rd;

  std::vector<BoundRecord> out;
  BoundRecord ll = make("rq_low_alpha_lower", BoundKind::lower, mixed,
                        "(1-alpha) rho(RQ) + (2 alpha - 1) RTr_1");
  BoundRecord lu = make("rq_low_alpha_upper", BoundKind::upper, blend,
                        "alpha rho(RQ) + (1 - 2 alpha) rho(RD)");
  BoundRecord hl = make("rq_high_alpha_lower", BoundKind::lower, blend,
                        "alpha rho(RQ) + (1 - 2 alpha) rho(RD)");
  BoundRecord hu = make("rq_high_alpha_upper", BoundKind::upper, mixed,
                        "(1-alpha) rho(RQ) + (2 alpha - 1) RTr_1");
  if (a > 0.5) {
    mark_inapplicable(ll, "requires alpha <= 1/2");
    mark_inapplicable(lu, "requires alpha <= 1/2");
  }
  if (a < 0.5) {
    mark_inapplicable(hl, "requires alpha >= 1/2");
    mark_inapplicable(hu, "requires alpha >= 1/2");
  }
  out.push_back(ll);
  out.push_back(lu);
  out.push_back(hl);
  out.push_back(hu);

  const double sum = sym_eigen(rd_alpha(b, alpha)).largest() +
                     sym_eigen(rd_alpha(b, Alpha(alpha.complement()))).largest();
  out.push_back(make("complementary_sum", BoundKind::upper, sum,
                     "rho(RD_alpha) + rho(RD_{1-alpha})", BoundTarget::rq_spectral_radius));
  return out;
}

BoundRecord bipartite_bound(const Graph &g, Alpha alpha) {
  if (!is_connected(g)) throw NotConnectedError();
  const auto sides = bipartition(g);
  if (!sides) throw InvalidArgumentError("bipartite_bound: graph is not bipartite");
  const int n = g.order();
  const int ones = static_cast<int>(std::count(sides->begin(), sides->end(), 1));
  const int part = std::min(ones, n - ones);
  const double a = alpha.value(), c = alpha.complement();
  const double disc = (a - 0.5) * (a - 0.5) * (2.0 * part - n) * (2.0 * part - n) +
                      4 * c * c * part * (n - part);
  BoundRecord r = make("bipartite_upper", BoundKind::upper,
                       0.5 * ((a + 0.5) * n - 1 + std::sqrt(disc)),
                       "complete bipartite spectral radius with the same parts");
  r.equality_expected = g.size() == part * (n - part);
  return r;
}

std::vector<BoundRecord> full_bound_report(const Graph &g, Alpha alpha) {
  std::vector<BoundRecord> out = bound_report(g, alpha);
  std::vector<BoundRecord> rq = rq_relation_bounds(g, alpha);
  out.insert(out.end(), rq.begin(), rq.end());
  if (bipartition(g)) out.push_back(bipartite_bound(g, alpha));
  return out;
}

}  // namespace rdalpha
