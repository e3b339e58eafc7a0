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
#include <numeric>

#include "rdalpha/canonical.hpp"
#include "rdalpha/closed_forms.hpp"
#include "rdalpha/constructors.hpp"
#include "rdalpha/distances.hpp"
#include "rdalpha/eigen.hpp"
#include "rdalpha/error.hpp"
#include "support/oracles.hpp"

using namespace rdalpha;

namespace {

const double kAlphas[] = {0.0, 0.25, 0.5, 7.0 / 16.0, 0.75, 1.0};

std::vector<double> numeric(const Graph &g, double a) {
  return sym_eigen(rd_alpha(g, Alpha(a))).eigenvalues;
}

double distance(const ClosedFormSpectrum &s, const Graph &g, double a) {
  return multiset_distance(s.values(), numeric(g, a));
}

std::vector<double> sorted_desc(std::vector<double> v) {
  std::sort(v.begin(), v.end(), std::greater<>());
  return v;
}

}  // namespace

TEST_CASE("complete graph spectrum") {
  CHECK(spectrum_complete(4, Alpha(0.0)).values() == std::vector<double>{3, -1, -1, -1});
  CHECK(spectrum_complete(4, Alpha(0.5)).values() == std::vector<double>{3, 1, 1, 1});
  CHECK(spectrum_complete(1, Alpha(0.3)).values() == std::vector<double>{0});
  for (int n = 1; n <= 8; ++n)
    for (double a : kAlphas) CHECK(distance(spectrum_complete(n, Alpha(a)), make::complete(n), a) < 1e-12);
  CHECK_THROWS_AS(spectrum_complete(0, Alpha(0.0)), InvalidArgumentError);
}

TEST_CASE("regular graphs of diameter two") {
  CHECK(oracle::max_abs_diff(spectrum_regular_diam2(make::cycle(4), Alpha(0.0)).values(),
                             {2.5, -0.5, -0.5, -1.5}) < 1e-12);

  // C_5: top value (n + r - 1) / 2 = 3, the rest from the circulant
  // adjacency eigenvalues 2cos(2 pi j / 5).
  std::vector<double> c5{3.0};
  const auto adj = oracle::cycle_adjacency_spectrum(5);
  for (int j = 1; j < 5; ++j) c5.push_back(0.5 * (-1 + adj[j]));
  CHECK(oracle::max_abs_diff(spectrum_regular_diam2(make::cycle(5), Alpha(0.0)).values(),
                             sorted_desc(c5)) < 1e-12);

  std::vector<double> pet{6};
  pet.insert(pet.end(), 5, 0.0);
  pet.insert(pet.end(), 4, -1.5);
  CHECK(oracle::max_abs_diff(spectrum_regular_diam2(make::petersen(), Alpha(0.0)).values(), pet) <
        1e-12);

  for (const Graph &g : {make::cycle(4), make::cycle(5), make::petersen(),
                         make::complete_bipartite(3, 3), make::turan(6, 3)})
    for (double a : kAlphas) CHECK(distance(spectrum_regular_diam2(g, Alpha(a)), g, a) < 1e-10);

  CHECK_THROWS_AS(spectrum_regular_diam2(make::path(4), Alpha(0.0)), InvalidArgumentError);
  CHECK_THROWS_AS(spectrum_regular_diam2(make::cycle(6), Alpha(0.0)), InvalidArgumentError);
  CHECK_THROWS_AS(spectrum_regular_diam2(make::complete(4), Alpha(0.0)), InvalidArgumentError);
}

TEST_CASE("joins of regular graphs") {
  for (double a : kAlphas) {
    const Alpha al(a);
    const ClosedFormSpectrum w =
        spectrum_join_regular(regular_spectrum(make::complete(1)), regular_spectrum(make::cycle(4)), al);
    CHECK(multiset_distance(w.values(), spectrum_wheel(5, al).values()) < 1e-12);
    for (int p = 1; p <= 4; ++p)
      for (int q = 1; q <= 4; ++q) {
        const ClosedFormSpectrum e = spectrum_join_regular(regular_spectrum(make::edgeless(p)),
                                                           regular_spectrum(make::edgeless(q)), al);
        CHECK(multiset_distance(e.values(), spectrum_complete_bipartite(p, q, al).values()) < 1e-12);
      }
    const Graph g1 = make::cycle(5), g2 = make::complete(3);
    CHECK(distance(spectrum_join_regular(regular_spectrum(g1), regular_spectrum(g2), al),
                   make::join(g1, g2), a) < 1e-10);
  }

  for (int n1 = 1; n1 <= 6; ++n1)
    for (int n2 = 1; n2 <= 6; ++n2)
      for (int r1 = 0; r1 < n1; ++r1)
        for (int r2 = 0; r2 < n2; ++r2)
          for (double a : kAlphas) CHECK(join_quadratic(n1, r1, n2, r2, Alpha(a)).discriminant >= 0);

  RegularGraphSpectrum bad{3, 2, {1.5, -0.5, -1.0}};
  CHECK_THROWS_AS(spectrum_join_regular(bad, regular_spectrum(make::complete(2)), Alpha(0.0)),
                  InvalidArgumentError);
  RegularGraphSpectrum wrong_size{3, 2, {2.0, -1.0}};
  CHECK_THROWS_AS(spectrum_join_regular(wrong_size, regular_spectrum(make::complete(2)), Alpha(0.0)),
                  InvalidArgumentError);
  CHECK_THROWS_AS(regular_spectrum(make::path(3)), InvalidArgumentError);
}

TEST_CASE("complete bipartite graphs") {
  const std::vector<double> want = sorted_desc({-0.5, -0.5, 0.5 * (1 + std::sqrt(13.0)),
                                                0.5 * (1 - std::sqrt(13.0))});
  CHECK(oracle::max_abs_diff(spectrum_complete_bipartite(1, 3, Alpha(0.0)).values(), want) < 1e-12);
  CHECK(oracle::max_abs_diff(spectrum_complete_bipartite(2, 2, Alpha(0.0)).values(),
                             {2.5, -0.5, -0.5, -1.5}) < 1e-12);
  for (int a = 1; a <= 6; ++a)
    for (int b = 1; b <= 6; ++b)
      for (double x : kAlphas) {
        const ClosedFormSpectrum s = spectrum_complete_bipartite(a, b, Alpha(x));
        CHECK(s.order() == a + b);
        const auto v = s.values();
        const double sum = std::accumulate(v.begin(), v.end(), 0.0);
        CHECK(std::abs(sum - 2 * x * harary_index(make::complete_bipartite(a, b))) < 1e-10);
        CHECK(distance(s, make::complete_bipartite(a, b), x) < 1e-10);
      }
}

TEST_CASE("complete split graphs") {
  for (double x : kAlphas) {
    CHECK(multiset_distance(spectrum_complete_split(1, 3, Alpha(x)).values(),
                            spectrum_complete_bipartite(1, 3, Alpha(x)).values()) < 1e-12);
    CHECK(distance(spectrum_complete_split(2, 2, Alpha(x)), make::complete(4).without_edge(2, 3), x) <
          1e-9);
  }
  for (int a = 1; a <= 5; ++a)
    for (int b = 2; b <= 5; ++b)
      for (double x : kAlphas) {
        const auto v = spectrum_complete_split(a, b, Alpha(x)).values();
        CHECK(std::abs(std::accumulate(v.begin(), v.end(), 0.0) -
                       2 * x * harary_index(make::complete_split(a, b))) < 1e-10);
      }
  CHECK_THROWS_AS(spectrum_complete_split(2, 1, Alpha(0.0)), InvalidArgumentError);
}

TEST_CASE("wheels") {
  const double r = std::sqrt(22.25);
  const std::vector<double> want = sorted_desc({-0.5, -0.5, -1.5, 0.5 * (2.5 + r), 0.5 * (2.5 - r)});
  CHECK(oracle::max_abs_diff(spectrum_wheel(5, Alpha(0.0)).values(), want) < 1e-12);
  for (double x : kAlphas) {
    const auto v = spectrum_wheel(5, Alpha(x)).values();
    CHECK(std::abs(std::accumulate(v.begin(), v.end(), 0.0) -
                   rd_alpha(make::wheel(5), Alpha(x)).trace()) < 1e-12);
  }
  CHECK(distance(spectrum_wheel(7, Alpha(0.25)), make::wheel(7), 0.25) < 1e-9);
  CHECK_THROWS_AS(spectrum_wheel(3, Alpha(0.0)), InvalidArgumentError);
}

TEST_CASE("complete multipartite graphs") {
  for (double x : kAlphas) {
    const std::vector<int> two{2, 2};
    CHECK(multiset_distance(spectrum_multipartite(two, Alpha(x)).values(),
                            spectrum_complete_bipartite(2, 2, Alpha(x)).values()) < 1e-12);
    for (int n = 4; n <= 8; ++n) {
      const std::vector<int> ones(n, 1);
      CHECK(multiset_distance(spectrum_multipartite(ones, Alpha(x)).values(),
                              spectrum_complete(n, Alpha(x)).values()) < 1e-12);
    }
  }
  const std::vector<int> k222{2, 2, 2};
  CHECK(distance(spectrum_multipartite(k222, Alpha(0.0)), make::complete_multipartite(k222), 0.0) <
        1e-9);

  const std::vector<int> mixed{1, 2, 3, 3};
  const QuotientMatrix q = multipartite_quotient(mixed, Alpha(0.3));
  CHECK(q.symmetrized().is_symmetric(1e-12));
  CHECK_FALSE(q.entries.is_symmetric(1e-3));

  CHECK_THROWS_AS(multipartite_quotient(std::vector<int>{4}, Alpha(0.0)), InvalidArgumentError);
  CHECK_THROWS_AS(multipartite_quotient(std::vector<int>{1, 2}, Alpha(0.0)), InvalidArgumentError);
  CHECK_THROWS_AS(multipartite_quotient(std::vector<int>{2, 0, 2}, Alpha(0.0)), InvalidArgumentError);
}

TEST_CASE("quadratic roots avoid cancellation") {
  const RootPair r = quadratic_roots(1e8, 1e16 - 4, 1.0);
  CHECK(std::abs(r.smaller - 1e-8) < 1e-20);
  CHECK(std::abs(r.larger - 1e8) < 1e-4);
  const RootPair neg = quadratic_roots(-1e8, 1e16 - 4, 1.0);
  CHECK(std::abs(neg.larger + 1e-8) < 1e-20);
  const RootPair zero = quadratic_roots(0.0, 4.0, -1.0);
  CHECK(zero.larger == 1.0);
  CHECK(zero.smaller == -1.0);
}

TEST_CASE("cluster quotients: named examples") {
  const std::vector<int> leaves{1, 2, 3};
  const Graph star = make::star(4);
  const ClusterSpec spec = make_cluster(star, leaves, ClusterVariant::independent);
  CHECK(spec.shared_neighbors == std::vector<int>{0});
  const ClusterQuotient q = cluster_quotient(star, spec, ClusterVariant::independent, Alpha(0.0));
  CHECK(q.repeated_eigenvalue == -0.5);
  CHECK(q.multiplicity == 2);
  CHECK(multiset_distance(q.spectrum(), numeric(star, 0.0)) < 1e-12);

  // The clique of K_a join (b isolated) is a clique cluster whose repeated
  // eigenvalue is the (alpha n - 1) family.
  for (int a = 2; a <= 5; ++a)
    for (int b = 2; b <= 5; ++b)
      for (double x : kAlphas) {
        const Graph g = make::complete_split(a, b);
        std::vector<int> clique(a);
        std::iota(clique.begin(), clique.end(), 0);
        const ClusterSpec c = make_cluster(g, clique, ClusterVariant::clique);
        const ClusterQuotient cq = cluster_quotient(g, c, ClusterVariant::clique, Alpha(x));
        CHECK(std::abs(cq.repeated_eigenvalue - (x * (a + b) - 1)) < 1e-12);
        CHECK(multiset_distance(cq.spectrum(), numeric(g, x)) < 1e-9);
      }

  // Double star: centres 0 and 1, leaves 2..4 on 0 and 5..6 on 1.
  const std::vector<Edge> edges{{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 5}, {1, 6}};
  const Graph ds(7, edges);
  const std::vector<int> left{2, 3, 4};
  for (double x : kAlphas) {
    const ClusterSpec c = make_cluster(ds, left, ClusterVariant::independent);
    const ClusterQuotient cq = cluster_quotient(ds, c, ClusterVariant::independent, Alpha(x));
    CHECK(multiset_distance(cq.spectrum(), numeric(ds, x)) < 1e-9);
    CHECK(cq.quotient.symmetrized().is_symmetric(1e-12));
  }
}

TEST_CASE("cluster quotients: random twin classes") {
  oracle::Rng rng(41);
  for (int trial = 0; trial < 60; ++trial) {
    const int m = 2 + static_cast<int>(rng() % 6);
    const int c = 2 + static_cast<int>(rng() % 3);
    const Graph base = oracle::random_connected(m, 0.3, rng);
    auto adj = oracle::adjacency(base);
    std::vector<int> shared;
    for (int v = 0; v < m; ++v)
      if (rng() % 2 || (v == m - 1 && shared.empty())) shared.push_back(v);
    const int n = m + c;
    for (auto &row : adj) row.resize(n, false);
    adj.resize(n, std::vector<bool>(n, false));
    std::vector<int> members;
    for (int k = 0; k < c; ++k) {
      members.push_back(m + k);
      for (int s : shared) adj[m + k][s] = adj[s][m + k] = true;
    }
    const Graph indep = oracle::from_adjacency(adj);
    for (int i : members)
      for (int j : members)
        if (i != j) adj[i][j] = true;
    const Graph clique = oracle::from_adjacency(adj);
    for (double x : kAlphas) {
      const ClusterSpec si = make_cluster(indep, members, ClusterVariant::independent);
      const ClusterSpec sc = make_cluster(clique, members, ClusterVariant::clique);
      CHECK(std::abs(si.transmission - sc.transmission) < 1e-12);
      const ClusterQuotient qi = cluster_quotient(indep, si, ClusterVariant::independent, Alpha(x));
      const ClusterQuotient qc = cluster_quotient(clique, sc, ClusterVariant::clique, Alpha(x));
      CHECK(multiset_distance(qi.spectrum(), numeric(indep, x)) < 1e-8);
      CHECK(multiset_distance(qc.spectrum(), numeric(clique, x)) < 1e-8);
      CHECK(multiplicity_of(numeric(indep, x), qi.repeated_eigenvalue) >= c - 1);
      CHECK(multiplicity_of(numeric(clique, x), qc.repeated_eigenvalue) >= c - 1);
    }
  }
}

TEST_CASE("cluster validation") {
  const Graph p = make::path(4);
  CHECK_THROWS_AS(make_cluster(p, std::vector<int>{0, 3}, ClusterVariant::independent),
                  InvalidArgumentError);  // different neighbours
  const Graph star = make::star(4);
  CHECK_THROWS_AS(make_cluster(star, std::vector<int>{1, 2}, ClusterVariant::clique),
                  InvalidArgumentError);  // variant mismatch
  CHECK_THROWS_AS(make_cluster(star, std::vector<int>{1}, ClusterVariant::independent),
                  InvalidArgumentError);
  CHECK_THROWS_AS(make_cluster(star, std::vector<int>{1, 1}, ClusterVariant::independent),
                  InvalidArgumentError);
  CHECK_THROWS_AS(make_cluster(star, std::vector<int>{1, 9}, ClusterVariant::independent),
                  InvalidArgumentError);
}

TEST_CASE("pendant vertices force repeated -1/2 in the spectrum of RD") {
  CHECK(pendant_counts(make::star(5)).pendant == 4);
  CHECK(pendant_counts(make::star(5)).quasi_pendant == 1);
  CHECK(pendant_counts(make::path(2)).quasi_pendant == 2);
  for (int n = 2; n <= 6; ++n)
    for (const Graph &g : enumerate_connected_graphs(n)) {
      const PendantCounts pc = pendant_counts(g);
      CHECK(multiplicity_of(numeric(g, 0.0), -0.5) >= pc.pendant - pc.quasi_pendant);
    }
}
