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

#include "rdalpha/distances.hpp"

#include <algorithm>
#include <functional>
#include <queue>

#include "rdalpha/error.hpp"

namespace rdalpha {

int DistanceMatrix::diameter() const {
  return d_.empty() ? 0 : *std::max_element(d_.begin(), d_.end());
}

DistanceMatrix all_pairs_distances(const Graph &g) {
  const int n = g.order();
  std::vector<int> d(static_cast<std::size_t>(n) * n, -1);
  std::queue<int> frontier;
  for (int s = 0; s < n; ++s) {
    int *row = d.data() + static_cast<std::size_t>(s) * n;
    row[s] = 0;
    frontier.push(s);
    int reached = 1;
    while (!frontier.empty()) {
      int v = frontier.front();
      frontier.pop();
      for (int w : g.neighbors(v))
        if (row[w] < 0) {
          row[w] = row[v] + 1;
          ++reached;
          frontier.push(w);
        }
    }
    if (reached != n) throw NotConnectedError();
  }
  return DistanceMatrix(n, std::move(d));
}

double ReciprocalTransmissions::max() const {
  return *std::max_element(values.begin(), values.end());
}

double ReciprocalTransmissions::min() const {
  return *std::min_element(values.begin(), values.end());
}

std::vector<double> ReciprocalTransmissions::sorted() const {
  std::vector<double> out = values;
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

ReciprocalTransmissions reciprocal_transmissions(const DistanceMatrix &d) {
  const int n = d.order();
  ReciprocalTransmissions rt;
  rt.values.assign(n, 0.0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) rt.values[i] += 1.0 / d(i, j);
  return rt;
}

ReciprocalTransmissions reciprocal_transmissions(const Graph &g) {
  return reciprocal_transmissions(all_pairs_distances(g));
}

double harary_index(const Graph &g) {
  const DistanceMatrix d = all_pairs_distances(g);
  double h = 0.0;
  for (int i = 0; i < d.order(); ++i)
    for (int j = i + 1; j < d.order(); ++j) h += 1.0 / d(i, j);
  return h;
}

bool is_transmission_regular(const Graph &g, double tol) {
  const auto rt = reciprocal_transmissions(g);
  return rt.max() - rt.min() <= tol;
}

}  // namespace rdalpha
