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

#ifndef RDALPHA_CLOSED_FORMS_HPP
#define RDALPHA_CLOSED_FORMS_HPP

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rdalpha/graph.hpp"
#include "rdalpha/matrices.hpp"
#include "rdalpha/matrix.hpp"

namespace rdalpha {

/// Spectrum of RD_alpha for a structured family, as (value, multiplicity)
/// pairs. Values may repeat across entries.
struct ClosedFormSpectrum {
  std::vector<std::pair<double, int>> families;
  std::string source;
  std::vector<std::pair<std::string, double>> parameters;

  int order() const;
  /// Every eigenvalue expanded by multiplicity, descending.
  std::vector<double> values() const;
  double largest() const;
};

/// Possibly non-symmetric quotient matrix together with the positive
/// diagonal D such that D * entries * D^-1 is symmetric.
struct QuotientMatrix {
  Matrix entries;
  std::vector<double> symmetrizer;

  Matrix symmetrized() const;
  /// Eigenvalues (descending) via the symmetrized form.
  std::vector<double> eigenvalues() const;
};

/// Roots of a real quadratic given as (sum +- sqrt(discriminant)) / 2 with
/// known product. The root of larger magnitude is taken from the explicit
/// formula and the other from product / root, which avoids cancellation.
struct RootPair {
  double larger;
  double smaller;
};
RootPair quadratic_roots(double sum, double discriminant, double product);

/// {n - 1, (alpha n - 1)^[n - 1]}.
ClosedFormSpectrum spectrum_complete(int n, Alpha alpha);

/// r-regular graph of diameter exactly 2: (n + r - 1) / 2 together with
/// ((alpha n + alpha r - 1) + (1 - alpha) lambda_i) / 2 for the
/// non-principal adjacency eigenvalues. Throws InvalidArgumentError
/// otherwise.
ClosedFormSpectrum spectrum_regular_diam2(const Graph &g, Alpha alpha);

/// Order, degree and adjacency spectrum of an r-regular graph.
struct RegularGraphSpectrum {
  int n = 0;
  int r = 0;
  std::vector<double> adjacency_eigenvalues;
};

/// Throws InvalidArgumentError if g is not regular.
RegularGraphSpectrum regular_spectrum(const Graph &g);

/// Spectrum of RD_alpha(G1 join G2) for regular G1, G2.
ClosedFormSpectrum spectrum_join_regular(const RegularGraphSpectrum &g1,
                                         const RegularGraphSpectrum &g2, Alpha alpha);

/// Same two quadratic roots that close out spectrum_join_regular; exposed so
/// the discriminant can be inspected.
struct JoinQuadratic {
  double sum;
  double discriminant;
  double product;
};
JoinQuadratic join_quadratic(int n1, int r1, int n2, int r2, Alpha alpha);

ClosedFormSpectrum spectrum_complete_bipartite(int a, int b, Alpha alpha);
/// K_a join (b isolated vertices); a >= 1, b >= 2.
ClosedFormSpectrum spectrum_complete_split(int a, int b, Alpha alpha);
/// K_1 join C_{n-1}; n >= 4.
ClosedFormSpectrum spectrum_wheel(int n, Alpha alpha);

/// Parts n_1..n_r with r >= 2 and sum >= 4.
QuotientMatrix multipartite_quotient(std::span<const int> parts, Alpha alpha);
ClosedFormSpectrum spectrum_multipartite(std::span<const int> parts, Alpha alpha);

// ---------------------------------------------------------------------------
// Clusters

enum class ClusterVariant {
  independent,  // the cluster vertices are pairwise non-adjacent
  clique,       // the cluster has been completed to K_c
};

/**
 * A set C (|C| >= 2) of vertices that all have the same neighbors S outside
 * C. `transmission` is the common reciprocal transmission of C's vertices in
 * the independent form of the graph.
 */
struct ClusterSpec {
  std::vector<int> members;
  std::vector<int> shared_neighbors;
  double transmission = 0.0;
};

/// Validates `members` against g (which must realize `variant`) and fills in
/// S and t. Throws InvalidArgumentError if C is not a cluster of that kind.
ClusterSpec make_cluster(const Graph &g, std::span<const int> members,
                         ClusterVariant variant);

struct ClusterQuotient {
  double repeated_eigenvalue = 0.0;
  int multiplicity = 0;
  QuotientMatrix quotient;

  /// repeated^[c-1] together with the quotient's eigenvalues, descending.
  std::vector<double> spectrum() const;
};

ClusterQuotient cluster_quotient(const Graph &g, const ClusterSpec &cluster,
                                 ClusterVariant variant, Alpha alpha);

/// Pendant vertices (degree 1) and quasi-pendant vertices (neighbors of a
/// pendant vertex).
struct PendantCounts {
  int pendant = 0;
  int quasi_pendant = 0;
};
PendantCounts pendant_counts(const Graph &g);

}  // namespace rdalpha

#endif  // RDALPHA_CLOSED_FORMS_HPP
