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

#include "rdalpha/closed_forms.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <numeric>
#include <set>
#include <string>

#include "rdalpha/distances.hpp"
#include "rdalpha/eigen.hpp"
#include "rdalpha/error.hpp"

namespace rdalpha {
namespace {

void add_family(ClosedFormSpectrum &s, double value, int multiplicity) {
  if (multiplicity > 0) s.families.emplace_back(value, multiplicity);
}

void add_roots(ClosedFormSpectrum &s, double sum, double disc, double product) {
  const RootPair r = quadratic_roots(sum, disc, product);
  add_family(s, r.larger, 1);
  add_family(s, r.smaller, 1);
}

std::vector<double> non_principal(const RegularGraphSpectrum &g, const char *what) {
  if (g.n < 1 || static_cast<int>(g.adjacency_eigenvalues.size()) != g.n)
    throw InvalidArgumentError(std::string(what) + ": spectrum size differs from order");
  if (g.r < 0 || g.r > g.n - 1)
    throw InvalidArgumentError(std::string(what) + ": degree out of range");
  std::vector<double> ev = g.adjacency_eigenvalues;
  std::sort(ev.begin(), ev.end(), std::greater<>());
  const double tol = 1e-9 * std::max(1, g.r);
  if (std::abs(ev.front() - g.r) > tol)
    throw InvalidArgumentError(std::string(what) +
                               ": largest adjacency eigenvalue differs from degree");
  if (ev.back() < -g.r - tol)
    throw InvalidArgumentError(std::string(what) +
                               ": adjacency eigenvalue below -degree");
  ev.erase(ev.begin());
  return ev;
}

}  // namespace

int ClosedFormSpectrum::order() const {
  int n = 0;
  for (const auto &[v, m] : families) n += m;
  return n;
}

std::vector<double> ClosedFormSpectrum::values() const {
  std::vector<double> out;
  out.reserve(order());
  for (const auto &[v, m] : families) out.insert(out.end(), m, v);
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

double ClosedFormSpectrum::largest() const {
  if (families.empty()) throw InvalidArgumentError("empty spectrum");
  double best = families.front().first;
  for (const auto &[v, m] : families) best = std::max(best, v);
  return best;
}

Matrix QuotientMatrix::symmetrized() const {
  const int k = entries.rows();
  Matrix s(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) s(i, j) = symmetrizer[i] * entries(i, j) / symmetrizer[j];
  return s;
}

std::vector<double> QuotientMatrix::eigenvalues() const {
  return sym_eigen(symmetrized()).eigenvalues;
}

RootPair quadratic_roots(double sum, double discriminant, double product) {
  const double root = std::sqrt(std::max(0.0, discriminant));
  RootPair r{};
  if (sum >= 0) {
    r.larger = 0.5 * (sum + root);
    r.smaller = r.larger != 0.0 ? product / r.larger : 0.5 * (sum - root);
  } else {
    r.smaller = 0.5 * (sum - root);
    r.larger = r.smaller != 0.0 ? product / r.smaller : 0.5 * (sum + root);
  }
  return r;
}

ClosedFormSpectrum spectrum_complete(int n, Alpha alpha) {
  if (n < 1) throw InvalidArgumentError("spectrum_complete: n must be >= 1");
  ClosedFormSpectrum s;
  s.source = "complete";
  s.parameters = {{"n", n}, {"alpha", alpha.value()}};
  add_family(s, n - 1.0, 1);
  add_family(s, alpha.value() * n - 1.0, n - 1);
  return s;
}

RegularGraphSpectrum regular_spectrum(const Graph &g) {
  const int n = g.order();
  const int r = g.degree(0);
  for (int v = 1; v < n; ++v)
    if (g.degree(v) != r) throw InvalidArgumentError("regular_spectrum: graph not regular");
  Matrix a(n, n);
  for (int v = 0; v < n; ++v)
    for (int u : g.neighbors(v)) a(v, u) = 1.0;
  RegularGraphSpectrum out{n, r, sym_eigen(a).eigenvalues};
  out.adjacency_eigenvalues.front() = r;
  return out;
}

ClosedFormSpectrum spectrum_regular_diam2(const Graph &g, Alpha alpha) {
  const RegularGraphSpectrum rs = regular_spectrum(g);
  if (all_pairs_distances(g).diameter() != 2)
    throw InvalidArgumentError("spectrum_regular_diam2: diameter is not 2");
  const double a = alpha.value();
  const int n = rs.n, r = rs.r;
  ClosedFormSpectrum s;
  s.source = "regular_diameter_two";
  s.parameters = {{"n", n}, {"r", r}, {"alpha", a}};
  add_family(s, 0.5 * (n + r - 1), 1);
  for (double l : non_principal(rs, "spectrum_regular_diam2"))
    add_family(s, 0.5 * ((a * n + a * r - 1) + (1 - a) * l), 1);
  return s;
}

JoinQuadratic join_quadratic(int n1, int r1, int n2, int r2, Alpha alpha) {
  const double a = alpha.value(), b = alpha.complement();
  const double u1 = a * n2 + 0.5 * (n1 + r1 - 1);
  const double u2 = a * n1 + 0.5 * (n2 + r2 - 1);
  const double coupling = b * b * n1 * n2;
  return {u1 + u2, (u1 - u2) * (u1 - u2) + 4 * coupling, u1 * u2 - coupling};
}

ClosedFormSpectrum spectrum_join_regular(const RegularGraphSpectrum &g1,
                                         const RegularGraphSpectrum &g2, Alpha alpha) {
  const std::vector<double> l1 = non_principal(g1, "spectrum_join_regular");
  const std::vector<double> l2 = non_principal(g2, "spectrum_join_regular");
  const double a = alpha.value(), b = alpha.complement();
  const int n = g1.n + g2.n;
  ClosedFormSpectrum s;
  s.source = "join_of_regular";
  s.parameters = {{"n1", g1.n}, {"r1", g1.r}, {"n2", g2.n}, {"r2", g2.r}, {"alpha", a}};
  for (double l : l1) add_family(s, 0.5 * (a * (n + g2.n + g1.r) + b * l - 1), 1);
  for (double l : l2) add_family(s, 0.5 * (a * (n + g1.n + g2.r) + b * l - 1), 1);
  const JoinQuadratic q = join_quadratic(g1.n, g1.r, g2.n, g2.r, alpha);
  add_roots(s, q.sum, q.discriminant, q.product);
  return s;
}

ClosedFormSpectrum spectrum_complete_bipartite(int a, int b, Alpha alpha) {
  if (a < 1 || b < 1) throw InvalidArgumentError("spectrum_complete_bipartite: a, b >= 1");
  const double x = alpha.value(), y = alpha.complement();
  const int n = a + b;
  ClosedFormSpectrum s;
  s.source = "complete_bipartite";
  s.parameters = {{"a", a}, {"b", b}, {"alpha", x}};
  add_family(s, 0.5 * (x * (n + b) - 1), a - 1);
  add_family(s, 0.5 * (x * (n + a) - 1), b - 1);
  const double sum = (x + 0.5) * n - 1;
  const double disc = (x - 0.5) * (x - 0.5) * (a - b) * (a - b) + 4 * y * y * a * b;
  const double u1 = x * b + 0.5 * (a - 1), u2 = x * a + 0.5 * (b - 1);
  add_roots(s, sum, disc, u1 * u2 - y * y * a * b);
  return s;
}

ClosedFormSpectrum spectrum_complete_split(int a, int b, Alpha alpha) {
  if (a < 1 || b < 2) throw InvalidArgumentError("spectrum_complete_split: a >= 1, b >= 2");
  const double x = alpha.value(), y = alpha.complement();
  const int n = a + b;
  ClosedFormSpectrum s;
  s.source = "complete_split";
  s.parameters = {{"a", a}, {"b", b}, {"alpha", x}};
  add_family(s, x * n - 1, a - 1);
  add_family(s, 0.5 * (x * (n + a) - 1), b - 1);
  const double sum = (x + 1) * n - 0.5 * b - 1.5;
  const double lin = (x - 1) * (a - b) - 0.5 * b + 0.5;
  const double disc = lin * lin + 4 * y * y * a * b;
  const double u1 = x * b + a - 1, u2 = x * a + 0.5 * (b - 1);
  add_roots(s, sum, disc, u1 * u2 - y * y * a * b);
  return s;
}

ClosedFormSpectrum spectrum_wheel(int n, Alpha alpha) {
  if (n < 4) throw InvalidArgumentError("spectrum_wheel: n must be >= 4");
  const double x = alpha.value(), y = alpha.complement();
  ClosedFormSpectrum s;
  s.source = "wheel";
  s.parameters = {{"n", n}, {"alpha", x}};
  for (int j = 1; j <= n - 2; ++j) {
    const double c = std::cos(2 * std::numbers::pi * j / (n - 1));
    add_family(s, 0.5 * (x * (n + 3) - 1 + 2 * y * c), 1);
  }
  const double sum = (x + 0.5) * n;
  const double lin = x * (n - 2) - 0.5 * n;
  const double disc = lin * lin + 4 * y * y * (n - 1);
  const double u1 = x * (n - 1), u2 = x + 0.5 * n;
  add_roots(s, sum, disc, u1 * u2 - y * y * (n - 1));
  return s;
}

QuotientMatrix multipartite_quotient(std::span<const int> parts, Alpha alpha) {
  const int r = static_cast<int>(parts.size());
  if (r < 2) throw InvalidArgumentError("multipartite: need at least two parts");
  for (int p : parts)
    if (p < 1) throw InvalidArgumentError("multipartite: parts must be positive");
  const int n = std::accumulate(parts.begin(), parts.end(), 0);
  if (n < 4) throw InvalidArgumentError("multipartite: order must be >= 4");
  const double x = alpha.value(), y = alpha.complement();
  QuotientMatrix q{Matrix(r, r), std::vector<double>(r)};
  for (int i = 0; i < r; ++i) {
    q.symmetrizer[i] = std::sqrt(static_cast<double>(parts[i]));
    for (int j = 0; j < r; ++j)
      q.entries(i, j) = i == j ? x * (n - parts[i]) + 0.5 * (parts[i] - 1) : y * parts[j];
  }
  return q;
}

ClosedFormSpectrum spectrum_multipartite(std::span<const int> parts, Alpha alpha) {
  const QuotientMatrix q = multipartite_quotient(parts, alpha);
  const int n = std::accumulate(parts.begin(), parts.end(), 0);
  const double x = alpha.value();
  ClosedFormSpectrum s;
  s.source = "complete_multipartite";
  s.parameters = {{"n", n}, {"parts", static_cast<double>(parts.size())}, {"alpha", x}};
  for (std::size_t i = 0; i < parts.size(); ++i)
    s.parameters.emplace_back("part" + std::to_string(i + 1), parts[i]);
  for (int p : parts) add_family(s, x * (n - 0.5 * p) - 0.5, p - 1);
  for (double l : q.eigenvalues()) add_family(s, l, 1);
  return s;
}

ClusterSpec make_cluster(const Graph &g, std::span<const int> members,
                         ClusterVariant variant) {
  const int n = g.order();
  const int c = static_cast<int>(members.size());
  if (c < 2) throw InvalidArgumentError("cluster needs at least two vertices");
  std::vector<char> in(n, 0);
  for (int v : members) {
    if (v < 0 || v >= n) throw InvalidArgumentError("cluster vertex out of range");
    if (in[v]) throw InvalidArgumentError("cluster vertex repeated");
    in[v] = 1;
  }
  const bool want_adjacent = variant == ClusterVariant::clique;
  for (int i = 0; i < c; ++i)
    for (int j = i + 1; j < c; ++j)
      if (g.adjacent(members[i], members[j]) != want_adjacent)
        throw InvalidArgumentError(want_adjacent ? "cluster is not a clique"
                                                 : "cluster is not independent");

  auto outside = [&](int v) {
    std::vector<int> s;
    for (int u : g.neighbors(v))
      if (!in[u]) s.push_back(u);
    std::sort(s.begin(), s.end());
    return s;
  };
  ClusterSpec spec;
  spec.members.assign(members.begin(), members.end());
  spec.shared_neighbors = outside(members[0]);
  for (int v : members)
    if (outside(v) != spec.shared_neighbors)
      throw InvalidArgumentError("cluster vertices have different outside neighbors");
  if (spec.shared_neighbors.empty())
    throw InvalidArgumentError("cluster has no outside neighbors");

  const double rtr = reciprocal_transmissions(g).values[members[0]];
  spec.transmission = want_adjacent ? rtr - 0.5 * (c - 1) : rtr;
  return spec;
}

std::vector<double> ClusterQuotient::spectrum() const {
  std::vector<double> out = quotient.eigenvalues();
  out.insert(out.end(), multiplicity, repeated_eigenvalue);
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

ClusterQuotient cluster_quotient(const Graph &g, const ClusterSpec &cluster,
                                 ClusterVariant variant, Alpha alpha) {
  // Revalidates and recomputes the cluster so a stale spec cannot slip through.
  const ClusterSpec spec = make_cluster(g, cluster.members, variant);
  const int n = g.order();
  const int c = static_cast<int>(spec.members.size());
  const double x = alpha.value(), y = alpha.complement();
  const double t = spec.transmission;

  std::vector<char> in(n, 0);
  for (int v : spec.members) in[v] = 1;
  std::vector<int> rest;
  for (int v = 0; v < n; ++v)
    if (!in[v]) rest.push_back(v);

  const DistanceMatrix d = all_pairs_distances(g);
  const std::vector<double> rtr = reciprocal_transmissions(d).values;
  const int u = spec.members[0];
  const int k = n - c + 1;

  ClusterQuotient out;
  out.multiplicity = c - 1;
  out.quotient.entries = Matrix(k, k);
  out.quotient.symmetrizer.assign(k, 1.0);
  out.quotient.symmetrizer[0] = std::sqrt(static_cast<double>(c));
  Matrix &q = out.quotient.entries;
  if (variant == ClusterVariant::independent) {
    out.repeated_eigenvalue = x * t + 0.5 * (x - 1);
    q(0, 0) = x * (t + 0.5) - 0.5 + 0.5 * c * y;
  } else {
    out.repeated_eigenvalue = x * (t + 0.5 * c + 0.5) - 1;
    q(0, 0) = x * (t + 0.5) - 1 + 0.5 * c * (2 - x);
  }
  for (int i = 0; i < k - 1; ++i) {
    const int vi = rest[i];
    const double xi = y / d(u, vi);
    q(0, i + 1) = xi;
    q(i + 1, 0) = c * xi;
    for (int j = 0; j < k - 1; ++j) {
      const int vj = rest[j];
      q(i + 1, j + 1) = i == j ? x * rtr[vi] : y / d(vi, vj);
    }
  }
  return out;
}

PendantCounts pendant_counts(const Graph &g) {
  PendantCounts out;
  std::set<int> quasi;
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) == 1) {
      ++out.pendant;
      quasi.insert(g.neighbors(v)[0]);
    }
  out.quasi_pendant = static_cast<int>(quasi.size());
  return out;
}

}  // namespace rdalpha
