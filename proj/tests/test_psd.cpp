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
#include <numbers>

#include "rdalpha/canonical.hpp"
#include "rdalpha/constructors.hpp"
#include "rdalpha/distances.hpp"
#include "rdalpha/error.hpp"
#include "rdalpha/io.hpp"
#include "rdalpha/psd.hpp"
#include "support/oracles.hpp"

using namespace rdalpha;

TEST_CASE("bisection reproduces the known thresholds") {
  CHECK(std::abs(alpha0_bisection(make::star(4)).alpha0 - 1.0 / 3.0) < 1e-8);
  CHECK(std::abs(alpha0_bisection(make::wheel(5)).alpha0 - 0.3) < 1e-8);
  CHECK(std::abs(alpha0_bisection(make::cycle(4)).alpha0 - 0.375) < 1e-8);
  CHECK(std::abs(alpha0_bisection(make::complete(2)).alpha0 - 0.5) < 1e-8);
  const PsdThreshold t = alpha0_bisection(make::path(5));
  CHECK(t.method == PsdMethod::bisection);
  CHECK(t.residual < 1e-9);
}

TEST_CASE("single vertex is already PSD") {
  const PsdThreshold t = alpha0_bisection(Graph(1));
  CHECK(t.alpha0 == 0.0);
  CHECK(t.note == "already PSD at 0");
}

TEST_CASE("transmission-regular closed form") {
  CHECK(std::abs(alpha0_transmission_regular(make::cycle(4)).alpha0 - 0.375) < 1e-12);
  for (int n = 2; n <= 9; ++n)
    CHECK(std::abs(alpha0_transmission_regular(make::complete(n)).alpha0 - 1.0 / n) < 1e-12);

  // C_5: lambda_min(RD) = (-1 + 2cos(4 pi / 5)) / 2, common transmission 3.
  const double lmin = oracle::cycle_spectrum(5, 0.0).back();
  CHECK(std::abs(lmin - 0.5 * (-1 + 2 * std::cos(4 * std::numbers::pi / 5))) < 1e-12);
  CHECK(std::abs(alpha0_transmission_regular(make::cycle(5)).alpha0 - (-lmin / (3 - lmin))) < 1e-12);
  CHECK_THROWS_AS(alpha0_transmission_regular(make::path(4)), InvalidArgumentError);
}

TEST_CASE("complete bipartite closed form") {
  CHECK(std::abs(alpha0_complete_bipartite(1, 4).alpha0 - 1.0 / 3.0) < 1e-15);
  CHECK(std::abs(alpha0_complete_bipartite(2, 4).alpha0 - 0.375) < 1e-15);
  CHECK(std::abs(alpha0_complete_bipartite(3, 6).alpha0 - 1.0 / 3.0) < 1e-15);
  CHECK(std::abs(alpha0_complete_bipartite(2, 4).alpha0 -
                 alpha0_transmission_regular(make::cycle(4)).alpha0) < 1e-12);
  CHECK_THROWS_AS(alpha0_complete_bipartite(3, 5), InvalidArgumentError);
  CHECK_THROWS_AS(alpha0_complete_bipartite(1, 3), InvalidArgumentError);
  CHECK_THROWS_AS(alpha0_complete_bipartite(0, 6), InvalidArgumentError);
}

TEST_CASE("wheel closed form") {
  CHECK(std::abs(alpha0_wheel(5).alpha0 - 0.3) < 1e-15);
  CHECK(std::abs(alpha0_wheel(7).alpha0 - 0.25) < 1e-15);
  const double c = 2 * std::cos(4 * std::numbers::pi / 5);
  CHECK(std::abs(alpha0_wheel(6).alpha0 - (1 - c) / (9 - c)) < 1e-15);
  CHECK(std::abs(alpha0_wheel(4).alpha0 - 0.25) < 1e-15);  // W(4) = K_4
  CHECK_THROWS_AS(alpha0_wheel(3), InvalidArgumentError);
}

TEST_CASE("bisection agrees with the closed forms") {
  for (int n = 4; n <= 10; ++n) {
    for (int a = 1; 2 * a <= n; ++a)
      CHECK(std::abs(alpha0_bisection(make::complete_bipartite(a, n - a)).alpha0 -
                     alpha0_complete_bipartite(a, n).alpha0) < 1e-7);
    CHECK(std::abs(alpha0_bisection(make::wheel(n)).alpha0 - alpha0_wheel(n).alpha0) < 1e-7);
  }
}

TEST_CASE("threshold separates indefinite from PSD on every graph up to 7 vertices") {
  for (int n = 2; n <= 7; ++n)
    for (const Graph &g : enumerate_connected_graphs(n)) {
      const double a0 = alpha0_bisection(g).alpha0;
      INFO(to_graph6(g));
      CHECK(a0 > 0.0);
      CHECK(a0 <= 0.5);
      if (a0 - 0.01 >= 0) CHECK(min_eigenvalue(g, a0 - 0.01) < -1e-6);
      CHECK(min_eigenvalue(g, std::min(1.0, a0 + 0.01)) > -1e-9);
      if (is_transmission_regular(g, 1e-8))
        CHECK(std::abs(alpha0_transmission_regular(g).alpha0 - a0) < 1e-7);
    }
}

TEST_CASE("bisection argument validation") {
  CHECK_THROWS_AS(alpha0_bisection(make::path(3), 1e-13), InvalidArgumentError);
  CHECK_THROWS_AS(alpha0_bisection(make::edgeless(3)), NotConnectedError);
}
