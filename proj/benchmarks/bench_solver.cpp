// Copyright 2026 The polympo Authors.
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

#include "polympo/combinatorics.hpp"
#include "polympo/constraints.hpp"
#include "polympo/solver.hpp"

namespace {

void BM_SolvePowerLaw(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const int bits = static_cast<int>(state.range(1));
  for (auto _ : state) {
    auto a = polympo::solve_coefficients(k, bits);
    benchmark::DoNotOptimize(a.values.data());
  }
}
BENCHMARK(BM_SolvePowerLaw)
    ->ArgsProduct({{2, 4, 6, 8, 10, 14}, {64, 256, 1024}})
    ->Unit(benchmark::kMicrosecond);

void BM_BuildEtaSystem(benchmark::State& state) {
  const auto poly = polympo::PolynomialSpec::power(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto system = polympo::build_eta_system(poly);
    benchmark::DoNotOptimize(system.data());
  }
}
BENCHMARK(BM_BuildEtaSystem)->DenseRange(4, 20, 4)->Unit(benchmark::kMicrosecond);

void BM_Partitions(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    int count = 0;
    for (const auto& p : polympo::partitions(n, n)) count += p.length();
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_Partitions)->DenseRange(10, 40, 10);

}  // namespace
