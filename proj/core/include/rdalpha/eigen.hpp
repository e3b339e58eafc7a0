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

#ifndef RDALPHA_EIGEN_HPP
#define RDALPHA_EIGEN_HPP

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "rdalpha/graph.hpp"
#include "rdalpha/matrices.hpp"
#include "rdalpha/matrix.hpp"

namespace rdalpha {

/// Absolute tolerance used when grouping eigenvalues into multiplicities.
inline constexpr double kMultiplicityTol = 1e-7;

struct Spectrum {
  /// Descending.
  std::vector<double> eigenvalues;
  /// Column k pairs with eigenvalues[k]; present only when requested.
  std::optional<Matrix> eigenvectors;
  /// Off-diagonal Frobenius norm at termination.
  double residual = 0.0;
  int sweeps = 0;

  double largest() const { return eigenvalues.front(); }
  double smallest() const { return eigenvalues.back(); }
  std::vector<double> eigenvector(int k) const;
};

struct JacobiOptions {
  /// Stop once the off-diagonal norm is at most rel_tol * ||M||_F.
  double rel_tol = 1e-13;
  int max_sweeps = 60;
  /// Symmetry check: |m_ij - m_ji| <= symmetry_tol * max(1, max|m|).
  double symmetry_tol = 1e-12;
};

/**
 * Cyclic Jacobi eigensolver for dense symmetric matrices.
 *
 * Throws InvalidArgumentError for non-square or asymmetric input and
 * ConvergenceError (carrying the achieved residual) when max_sweeps is
 * exhausted.
 */
Spectrum sym_eigen(const Matrix &m, bool want_vectors = false,
                   const JacobiOptions &options = {});

struct PerronPair {
  double value = 0.0;
  /// Unit Euclidean norm, sign chosen so the entries sum to a positive value.
  std::vector<double> vector;
};

/// Largest eigenvalue of RD_alpha(g) and its eigenvector.
PerronPair perron_pair(const Graph &g, Alpha alpha);
double spectral_radius(const Graph &g, Alpha alpha);

/// Sum over i of |lambda_i(RD_alpha) - 2 alpha H / n|.
double rd_alpha_energy(const Graph &g, Alpha alpha);

/// (value, multiplicity) groups of a descending list; consecutive values
/// within `tol` of the group's first member join it.
std::vector<std::pair<double, int>> group_eigenvalues(std::span<const double> values,
                                                      double tol = kMultiplicityTol);

/// Number of entries within `tol` of `value`.
int multiplicity_of(std::span<const double> values, double value,
                    double tol = kMultiplicityTol);

/// Max-norm distance between two multisets, compared after sorting.
/// Returns +infinity when sizes differ.
double multiset_distance(std::vector<double> a, std::vector<double> b);

}  // namespace rdalpha

#endif  // RDALPHA_EIGEN_HPP
