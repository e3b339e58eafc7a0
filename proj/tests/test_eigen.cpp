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
#include <numeric>
#include <random>

#include "rdalpha/constructors.hpp"
#include "rdalpha/distances.hpp"
#include "rdalpha/eigen.hpp"
#include "rdalpha/error.hpp"
#include "support/oracles.hpp"

using namespace rdalpha;

namespace {

Matrix random_symmetric(int n, oracle::Rng &rng) {
  std::normal_distribution<double> normal;
  Matrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) m(i, j) = m(j, i) = normal(rng);
  return m;
}

}  // namespace

TEST_CASE("small matrices with known spectra") {
  const std::vector<double> d{3.0, -1.0, 2.0};
  CHECK(sym_eigen(Matrix::diagonal(d)).eigenvalues == std::vector<double>{3.0, 2.0, -1.0});
  Matrix m(2, 2);
  m(0, 0) = 2;
  m(1, 1) = 2;
  m(0, 1) = m(1, 0) = 1;
  const Spectrum s = sym_eigen(m);
  CHECK(std::abs(s.largest() - 3) < 1e-14);
  CHECK(std::abs(s.smallest() - 1) < 1e-14);
  CHECK(sym_eigen(Matrix(1, 1, 5.0)).eigenvalues == std::vector<double>{5.0});
  CHECK(sym_eigen(Matrix(3, 3)).eigenvalues == std::vector<double>{0.0, 0.0, 0.0});
}

TEST_CASE("eigenpairs satisfy the defining equations") {
  oracle::Rng rng(31);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 25);
    const Matrix a = random_symmetric(n, rng);
    const Spectrum s = sym_eigen(a, true);
    REQUIRE(s.eigenvectors.has_value());
    const double scale = std::max(1.0, a.frobenius_norm());
    for (int k = 0; k < n; ++k) {
      const std::vector<double> v = s.eigenvector(k);
      const std::vector<double> av = a * v;
      for (int i = 0; i < n; ++i) CHECK(std::abs(av[i] - s.eigenvalues[k] * v[i]) < 1e-11 * scale);
      for (int l = 0; l < n; ++l) {
        const std::vector<double> w = s.eigenvector(l);
        const double dot = std::inner_product(v.begin(), v.end(), w.begin(), 0.0);
        CHECK(std::abs(dot - (k == l ? 1.0 : 0.0)) < 1e-12);
      }
      if (k > 0) CHECK(s.eigenvalues[k - 1] >= s.eigenvalues[k]);
    }
    double sq = 0.0;
    for (double l : s.eigenvalues) sq += l * l;
    CHECK(std::abs(std::accumulate(s.eigenvalues.begin(), s.eigenvalues.end(), 0.0) - a.trace()) <
          1e-11 * scale);
    CHECK(std::abs(std::sqrt(sq) - a.frobenius_norm()) < 1e-11 * scale);
  }
}

TEST_CASE("Weyl inequalities hold for random symmetric pairs") {
  oracle::Rng rng(32);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 10);
    const Matrix a = random_symmetric(n, rng), b = random_symmetric(n, rng);
    const Spectrum sa = sym_eigen(a), sb = sym_eigen(b), sab = sym_eigen(a + b);
    for (int i = 0; i < n; ++i) {
      CHECK(sab.eigenvalues[i] >= sa.eigenvalues[i] + sb.smallest() - 1e-10);
      CHECK(sab.eigenvalues[i] <= sa.eigenvalues[i] + sb.largest() + 1e-10);
    }
  }
}

TEST_CASE("input validation and non-convergence") {
  CHECK_THROWS_AS(sym_eigen(Matrix(2, 3)), InvalidArgumentError);
  Matrix asym(2, 2);
  asym(0, 1) = 1.0;
  CHECK_THROWS_AS(sym_eigen(asym), InvalidArgumentError);
  oracle::Rng rng(33);
  const Matrix a = random_symmetric(6, rng);
  JacobiOptions strict;
  strict.max_sweeps = 1;
  CHECK_THROWS_AS(sym_eigen(a, false, strict), ConvergenceError);
  try {
    sym_eigen(a, false, strict);
  } catch (const ConvergenceError &e) {
    CHECK(e.residual() > 0.0);
  }
}

TEST_CASE("spectral radius of RD(P_3) matches the characteristic cubic") {
  const double want = oracle::path3_rho();
  CHECK(std::abs(spectral_radius(make::path(3), Alpha(0.0)) - want) < 1e-12);
  CHECK(std::abs(want - 1.68614) < 1e-5);
}

TEST_CASE("cycle spectra match the circulant oracle") {
  for (int n = 3; n <= 14; ++n)
    for (double a : {0.0, 0.25, 0.5, 0.8, 1.0}) {
      const Spectrum s = sym_eigen(rd_alpha(make::cycle(n), Alpha(a)));
      CHECK(oracle::max_abs_diff(s.eigenvalues, oracle::cycle_spectrum(n, a)) < 1e-12);
    }
}

TEST_CASE("Perron vector is positive and normalized") {
  oracle::Rng rng(34);
  for (int trial = 0; trial < 30; ++trial) {
    const Graph g = oracle::random_connected(2 + static_cast<int>(rng() % 10), 0.3, rng);
    for (double a : {0.0, 0.5, 0.9}) {
      const PerronPair p = perron_pair(g, Alpha(a));
      double norm = 0.0;
      for (double x : p.vector) {
        CHECK(x > 0.0);
        norm += x * x;
      }
      CHECK(std::abs(norm - 1.0) < 1e-12);
      CHECK(std::abs(p.value - spectral_radius(g, Alpha(a))) < 1e-12);
    }
  }
}

TEST_CASE("energy of complete graphs") {
  for (int n = 2; n <= 8; ++n)
    for (double a : {0.0, 0.3, 0.7}) {
      // Spectrum {n-1, (a n - 1)^[n-1]} centred at a(n-1).
      const double want = 2 * (1 - a) * (n - 1);
      CHECK(std::abs(rd_alpha_energy(make::complete(n), Alpha(a)) - want) < 1e-11);
    }
}

TEST_CASE("grouping and multiset helpers") {
  const std::vector<double> v{3.0, -0.5, -0.5 + 1e-9, 1.0, -0.5 - 1e-9};
  const auto groups = group_eigenvalues(v);
  REQUIRE(groups.size() == 3);
  CHECK(groups[0] == std::pair{3.0, 1});
  CHECK(groups[2].second == 3);
  CHECK(multiplicity_of(v, -0.5) == 3);
  CHECK(multiset_distance({1, 2, 3}, {3, 1, 2.5}) == 0.5);
  CHECK(std::isinf(multiset_distance({1}, {1, 2})));
}
