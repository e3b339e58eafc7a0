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

#include <benchmark/benchmark.h>

#include "rdalpha/canonical.hpp"
#include "rdalpha/constructors.hpp"
#include "rdalpha/eigen.hpp"
#include "rdalpha/matrices.hpp"
#include "rdalpha/psd.hpp"

namespace {

using namespace rdalpha;

void BM_JacobiEigenvalues(benchmark::State &state) {
  const Matrix m = rd_alpha(make::wheel(static_cast<int>(state.range(0))), Alpha(0.3));
  for (auto _ : state) benchmark::DoNotOptimize(sym_eigen(m).eigenvalues);
}
BENCHMARK(BM_JacobiEigenvalues)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

void BM_JacobiEigenvectors(benchmark::State &state) {
  const Matrix m = rd_alpha(make::wheel(static_cast<int>(state.range(0))), Alpha(0.3));
  for (auto _ : state) benchmark::DoNotOptimize(sym_eigen(m, true).eigenvectors);
}
BENCHMARK(BM_JacobiEigenvectors)->Arg(16)->Arg(64);

void BM_CanonicalForm(benchmark::State &state) {
  const Graph g = make::petersen();
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(g));
}
BENCHMARK(BM_CanonicalForm);

void BM_Enumerate(benchmark::State &state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(enumerate_connected_graphs(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_Enumerate)->Arg(5)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

void BM_PsdBisection(benchmark::State &state) {
  const Graph g = make::wheel(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(alpha0_bisection(g).alpha0);
}
BENCHMARK(BM_PsdBisection)->Arg(7)->Arg(20);

}  // namespace

BENCHMARK_MAIN();
