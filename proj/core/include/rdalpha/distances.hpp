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

#ifndef RDALPHA_DISTANCES_HPP
#define RDALPHA_DISTANCES_HPP

#include <vector>

#include "rdalpha/graph.hpp"

namespace rdalpha {

/// Hop distances of a connected graph; d(i, i) == 0.
class DistanceMatrix {
 public:
  DistanceMatrix(int n, std::vector<int> d) : n_(n), d_(std::move(d)) {}

  int order() const noexcept { return n_; }
  int operator()(int i, int j) const {
    return d_[static_cast<std::size_t>(i) * n_ + j];
  }
  int diameter() const;

 private:
  int n_;
  std::vector<int> d_;
};

/// BFS from every vertex. Throws NotConnectedError for disconnected input.
DistanceMatrix all_pairs_distances(const Graph &g);

/// RTr(v_i) = sum over j != i of 1/d_ij.
struct ReciprocalTransmissions {
  std::vector<double> values;

  double max() const;  // RTr_1
  double min() const;  // RTr_n
  /// Values sorted in descending order, so sorted()[k] is the (k+1)-th
  /// largest transmission.
  std::vector<double> sorted() const;
};

ReciprocalTransmissions reciprocal_transmissions(const Graph &g);
ReciprocalTransmissions reciprocal_transmissions(const DistanceMatrix &d);

/// Harary index: sum over unordered pairs of 1/d_ij.
double harary_index(const Graph &g);

/// True iff max - min of the reciprocal transmissions is at most `tol`.
bool is_transmission_regular(const Graph &g, double tol = 1e-8);

}  // namespace rdalpha

#endif  // RDALPHA_DISTANCES_HPP
