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

#include "rdalpha/matrices.hpp"

#include <string>

#include "rdalpha/error.hpp"

namespace rdalpha {

Alpha::Alpha(double value) : value_(value) {
  if (!(value >= 0.0 && value <= 1.0))
    throw InvalidArgumentError("alpha must lie in [0, 1], got " +
                               std::to_string(value));
}

Alpha Alpha::require_below_one(const char *what) const {
  if (!(value_ < 1.0))
    throw InvalidArgumentError(std::string(what) + ": requires alpha < 1");
  return *this;
}

MatrixBundle build_bundle(const Graph &g) {
  MatrixBundle b;
  b.n = g.order();
  b.distances = all_pairs_distances(g);
  b.transmissions = reciprocal_transmissions(b.distances).values;

  const int n = b.n;
  b.rd = Matrix(n, n);
  b.adjacency = Matrix(n, n);
  std::vector<double> deg(n);
  for (int i = 0; i < n; ++i) {
    deg[i] = g.degree(i);
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      b.rd(i, j) = 1.0 / b.distances(i, j);
      b.adjacency(i, j) = g.adjacent(i, j) ? 1.0 : 0.0;
    }
  }
  b.rt = Matrix::diagonal(b.transmissions);
  b.degree = Matrix::diagonal(deg);
  b.rl = b.rt - b.rd;
  b.rq = b.rt + b.rd;
  return b;
}

Matrix rd_alpha(const MatrixBundle &bundle, Alpha alpha) {
  const double a = alpha.value();
  const int n = bundle.n;
  Matrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      m(i, j) = i == j ? a * bundle.transmissions[i] : (1.0 - a) * bundle.rd(i, j);
  return m;
}

Matrix rd_alpha(const Graph &g, Alpha alpha) {
  return rd_alpha(build_bundle(g), alpha);
}

Matrix a_alpha(const Graph &g, Alpha alpha) {
  const double a = alpha.value();
  const int n = g.order();
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) {
    m(i, i) = a * g.degree(i);
    for (int j : g.neighbors(i)) m(i, j) = 1.0 - a;
  }
  return m;
}

}  // namespace rdalpha
