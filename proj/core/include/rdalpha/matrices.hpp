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

#ifndef RDALPHA_MATRICES_HPP
#define RDALPHA_MATRICES_HPP

#include <vector>

#include "rdalpha/distances.hpp"
#include "rdalpha/graph.hpp"
#include "rdalpha/matrix.hpp"

namespace rdalpha {

/// Convex-combination weight in [0, 1].
class Alpha {
 public:
  /// Throws InvalidArgumentError outside [0, 1] (including NaN).
  explicit Alpha(double value);

  double value() const noexcept { return value_; }
  double complement() const noexcept { return 1.0 - value_; }

  /// Throws unless value < 1 (operations needing an irreducible matrix).
  Alpha require_below_one(const char *what) const;

  friend bool operator==(Alpha, Alpha) = default;

 private:
  double value_;
};

/**
 * Every dense matrix derived from one connected graph:
 *
 *   rd         reciprocal distance (Harary) matrix, 1/d_ij off the diagonal
 *   rt         diagonal of reciprocal transmissions
 *   rl, rq     RT - RD and RT + RD
 *   adjacency  0/1 adjacency matrix
 *   degree     diagonal of vertex degrees
 */
struct MatrixBundle {
  int n = 0;
  DistanceMatrix distances{0, {}};
  std::vector<double> transmissions;
  Matrix rd;
  Matrix rt;
  Matrix rl;
  Matrix rq;
  Matrix adjacency;
  Matrix degree;
};

/// Throws NotConnectedError for disconnected graphs.
MatrixBundle build_bundle(const Graph &g);

/// alpha * RT + (1 - alpha) * RD.
Matrix rd_alpha(const MatrixBundle &bundle, Alpha alpha);
Matrix rd_alpha(const Graph &g, Alpha alpha);

/// alpha * degree + (1 - alpha) * adjacency.
Matrix a_alpha(const Graph &g, Alpha alpha);

}  // namespace rdalpha

#endif  // RDALPHA_MATRICES_HPP
