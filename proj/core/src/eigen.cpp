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

#include "rdalpha/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>

#include "rdalpha/distances.hpp"
#include "rdalpha/error.hpp"

namespace rdalpha {
namespace {

double off_diagonal_norm(const Matrix &a) {
  double s = 0.0;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = i + 1; j < a.cols(); ++j) s += a(i, j) * a(i, j);
  return std::sqrt(2.0 * s);
}

// Annihilates a(p, q) with the rotation J = [c s; -s c] acting on (p, q):
// a <- J^T a J, v <- v J.
void rotate(Matrix &a, Matrix *v, int p, int q) {
  const double apq = a(p, q);
  const double tau = (a(q, q) - a(p, p)) / (2.0 * apq);
  const double t = std::abs(tau) > 1e150
                       ? 0.5 / tau
                       : std::copysign(1.0, tau) / (std::abs(tau) + std::hypot(1.0, tau));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;
  const int n = a.rows();

  for (int k = 0; k < n; ++k) {
    const double akp = a(k, p), akq = a(k, q);
    a(k, p) = c * akp - s * akq;
    a(k, q) = s * akp + c * akq;
  }
  for (int k = 0; k < n; ++k) {
    const double apk = a(p, k), aqk = a(q, k);
    a(p, k) = c * apk - s * aqk;
    a(q, k) = s * apk + c * aqk;
  }
  a(p, q) = a(q, p) = 0.0;

  if (v) {
    for (int k = 0; k < n; ++k) {
      const double vkp = (*v)(k, p), vkq = (*v)(k, q);
      (*v)(k, p) = c * vkp - s * vkq;
      (*v)(k, q) = s * vkp + c * vkq;
    }
  }
}

}  // namespace

std::vector<double> Spectrum::eigenvector(int k) const {
  if (!eigenvectors) throw InvalidArgumentError("spectrum has no eigenvectors");
  std::vector<double> x(eigenvectors->rows());
  for (int i = 0; i < eigenvectors->rows(); ++i) x[i] = (*eigenvectors)(i, k);
  return x;
}

Spectrum sym_eigen(const Matrix &m, bool want_vectors, const JacobiOptions &options) {
  if (m.rows() != m.cols()) throw InvalidArgumentError("sym_eigen: matrix not square");
  if (!m.is_symmetric(options.symmetry_tol))
    throw InvalidArgumentError("sym_eigen: matrix not symmetric");
  const int n = m.rows();

  // Symmetrize exactly so rounding in the input cannot bias either triangle.
  Matrix a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = i == j ? m(i, i) : 0.5 * (m(i, j) + m(j, i));

  std::optional<Matrix> v;
  if (want_vectors) v = Matrix::identity(n);

  const double target = options.rel_tol * a.frobenius_norm();
  Spectrum out;
  double off = off_diagonal_norm(a);
  while (off > target) {
    if (out.sweeps == options.max_sweeps)
      throw ConvergenceError("sym_eigen: no convergence in " +
                                 std::to_string(options.max_sweeps) + " sweeps",
                             off);
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q)
        if (a(p, q) != 0.0) rotate(a, v ? &*v : nullptr, p, q);
    ++out.sweeps;
    off = off_diagonal_norm(a);
  }
  out.residual = off;

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int i, int j) { return a(i, i) > a(j, j); });
  out.eigenvalues.resize(n);
  for (int k = 0; k < n; ++k) out.eigenvalues[k] = a(order[k], order[k]);
  if (v) {
    Matrix sorted(n, n);
    for (int k = 0; k < n; ++k)
      for (int i = 0; i < n; ++i) sorted(i, k) = (*v)(i, order[k]);
    out.eigenvectors = std::move(sorted);
  }
  return out;
}

PerronPair perron_pair(const Graph &g, Alpha alpha) {
  const Spectrum s = sym_eigen(rd_alpha(g, alpha), true);
  PerronPair out{s.largest(), s.eigenvector(0)};
  double sum = std::accumulate(out.vector.begin(), out.vector.end(), 0.0);
  if (sum < 0)
    for (double &x : out.vector) x = -x;
  double norm = 0.0;
  for (double x : out.vector) norm += x * x;
  norm = std::sqrt(norm);
  for (double &x : out.vector) x /= norm;
  return out;
}

double spectral_radius(const Graph &g, Alpha alpha) {
  return sym_eigen(rd_alpha(g, alpha)).largest();
}

double rd_alpha_energy(const Graph &g, Alpha alpha) {
  const MatrixBundle b = build_bundle(g);
  const Spectrum s = sym_eigen(rd_alpha(b, alpha));
  const double harary =
      0.5 * std::accumulate(b.transmissions.begin(), b.transmissions.end(), 0.0);
  const double center = 2.0 * alpha.value() * harary / b.n;
  double energy = 0.0;
  for (double l : s.eigenvalues) energy += std::abs(l - center);
  return energy;
}

std::vector<std::pair<double, int>> group_eigenvalues(std::span<const double> values,
                                                      double tol) {
  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  std::vector<std::pair<double, int>> groups;
  for (double x : sorted) {
    if (!groups.empty() && std::abs(groups.back().first - x) <= tol)
      ++groups.back().second;
    else
      groups.emplace_back(x, 1);
  }
  return groups;
}

int multiplicity_of(std::span<const double> values, double value, double tol) {
  return static_cast<int>(std::count_if(values.begin(), values.end(), [&](double x) {
    return std::abs(x - value) <= tol;
  }));
}

double multiset_distance(std::vector<double> a, std::vector<double> b) {
  if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

}  // namespace rdalpha
