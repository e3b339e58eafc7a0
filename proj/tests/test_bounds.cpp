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

#include <doctest.h>

#include <cmath>

#include "rdalpha/bounds.hpp"
#include "rdalpha/canonical.hpp"
#include "rdalpha/constructors.hpp"
#include "rdalpha/distances.hpp"
#include "rdalpha/eigen.hpp"
#include "rdalpha/error.hpp"
#include "rdalpha/io.hpp"
#include "support/oracles.hpp"

using namespace rdalpha;

namespace {

const BoundRecord &find(const std::vector<BoundRecord> &rs, const std::string &name) {
  for (const BoundRecord &r : rs)
    if (r.name == name) return r;
  FAIL("missing record " << name);
  throw std::logic_error("unreachable");
}

std::vector<Graph> suite(int max_n) {
  std::vector<Graph> out;
  for (int n = 2; n <= max_n; ++n)
    for (Graph &g : enumerate_connected_graphs(n)) out.push_back(std::move(g));
  return out;
}

}  // namespace

TEST_CASE("Harary lower bound is exact on transmission-regular graphs") {
  for (double a : {0.0, 0.25, 0.5, 0.75, 1.0}) {
    const auto rs = bound_report(make::cycle(4), Alpha(a));
    CHECK(std::abs(find(rs, "harary_lower").value - 2.5) < 1e-14);
    CHECK(std::abs(spectral_radius(make::cycle(4), Alpha(a)) - 2.5) < 1e-12);
    CHECK(find(rs, "harary_lower").equality_expected);
  }
  const auto p3 = bound_report(make::path(3), Alpha(0.0));
  CHECK(std::abs(find(p3, "harary_lower").value - 5.0 / 3.0) < 1e-14);
  CHECK(find(p3, "harary_lower").value <= oracle::path3_rho());
  CHECK_FALSE(find(p3, "harary_lower").equality_expected);
}

TEST_CASE("column-norm bound on K_4") {
  const auto rs = bound_report(make::complete(4), Alpha(0.5));
  CHECK(std::abs(find(rs, "column_norm_upper").value - 3.0) < 1e-14);
  CHECK_FALSE(find(bound_report(make::complete(4), Alpha(1.0)), "column_norm_upper").applicable);
}

TEST_CASE("RQ relation bounds") {
  const Graph p3 = make::path(3);
  const MatrixBundle b = build_bundle(p3);
  const double rq = sym_eigen(b.rq).largest(), rd = sym_eigen(b.rd).largest();

  const auto half = rq_relation_bounds(p3, Alpha(0.5));
  for (const char *name : {"rq_low_alpha_lower", "rq_low_alpha_upper", "rq_high_alpha_lower",
                           "rq_high_alpha_upper"}) {
    CHECK(find(half, name).applicable);
    CHECK(std::abs(find(half, name).value - 0.5 * rq) < 1e-14);
  }
  CHECK(std::abs(spectral_radius(p3, Alpha(0.5)) - 0.5 * rq) < 1e-12);

  const auto zero = rq_relation_bounds(p3, Alpha(0.0));
  CHECK(std::abs(find(zero, "rq_low_alpha_upper").value - rd) < 1e-14);
  CHECK_FALSE(find(zero, "rq_high_alpha_lower").applicable);
  CHECK_FALSE(find(zero, "rq_high_alpha_lower").reason.empty());

  const auto quarter = rq_relation_bounds(p3, Alpha(0.25));
  const double rho = spectral_radius(p3, Alpha(0.25));
  CHECK(find(quarter, "rq_low_alpha_lower").value <= rho + 1e-12);
  CHECK(find(quarter, "rq_low_alpha_upper").value >= rho - 1e-12);
  CHECK(find(quarter, "complementary_sum").target == BoundTarget::rq_spectral_radius);
}

TEST_CASE("bipartite bound") {
  const BoundRecord c4 = bipartite_bound(make::complete_bipartite(2, 2), Alpha(0.0));
  CHECK(std::abs(c4.value - 2.5) < 1e-14);
  CHECK(c4.equality_expected);
  const BoundRecord p4 = bipartite_bound(make::path(4), Alpha(0.0));
  CHECK(std::abs(p4.value - 2.5) < 1e-14);
  CHECK(p4.value > spectral_radius(make::path(4), Alpha(0.0)) + 1e-3);
  CHECK_FALSE(p4.equality_expected);
  const BoundRecord star = bipartite_bound(make::star(4), Alpha(0.0));
  CHECK(std::abs(star.value - 0.5 * (1 + std::sqrt(13.0))) < 1e-14);
  CHECK(std::abs(star.value - spectral_radius(make::star(4), Alpha(0.0))) < 1e-12);
  CHECK(star.equality_expected);
  CHECK_THROWS_AS(bipartite_bound(make::cycle(5), Alpha(0.0)), InvalidArgumentError);
}

TEST_CASE("argument validation") {
  CHECK_THROWS_AS(bound_report(Graph(1), Alpha(0.0)), InvalidArgumentError);
  CHECK_THROWS_AS(bound_report(make::edgeless(3), Alpha(0.0)), NotConnectedError);
  BoundRecord off;
  off.applicable = false;
  off.value = 1e9;
  CHECK(bound_holds(off, SpectralTargets{}));
}

TEST_CASE("every applicable bound holds on all graphs up to 6 vertices") {
  for (const Graph &g : suite(6))
    for (double a : {0.0, 0.25, 0.5, 0.75, 1.0}) {
      const SpectralTargets t = spectral_targets(g, Alpha(a));
      for (const BoundRecord &r : full_bound_report(g, Alpha(a))) {
        INFO(to_graph6(g) << " alpha=" << a << " " << r.name);
        CHECK(bound_holds(r, t, 1e-9));
        if (r.applicable && r.equality_expected)
          CHECK(std::abs(r.value - t.get(r.target)) <= 1e-8);
      }
    }
}

TEST_CASE("weighted-transmission equality only on transmission-regular graphs") {
  for (const Graph &g : suite(6))
    for (double a : {0.5, 0.75, 0.9}) {
      const double rho = spectral_radius(g, Alpha(a));
      const auto rs = bound_report(g, Alpha(a));
      if (std::abs(find(rs, "transmission_weighted_upper").value - rho) <= 1e-10)
        CHECK(is_transmission_regular(g, 1e-8));
    }
}

TEST_CASE("eigenvalues are sandwiched between RD and the transmissions") {
  for (const Graph &g : suite(6)) {
    const std::vector<double> rd = sym_eigen(rd_alpha(g, Alpha(0.0))).eigenvalues;
    const std::vector<double> rt = reciprocal_transmissions(g).sorted();
    for (double a : {0.25, 0.5, 0.75, 1.0}) {
      const std::vector<double> ev = sym_eigen(rd_alpha(g, Alpha(a))).eigenvalues;
      for (std::size_t k = 0; k < ev.size(); ++k) {
        CHECK(rd[k] <= ev[k] + 1e-9);
        CHECK(ev[k] <= rt[k] + 1e-9);
      }
    }
  }
}
