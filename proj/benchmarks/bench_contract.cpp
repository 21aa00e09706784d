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

#include "polympo/mpo.hpp"
#include "polympo/solver.hpp"
#include "polympo/verify.hpp"

namespace {

void BM_ContractNilpotent(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const int L = static_cast<int>(state.range(1));
  const auto mpo = polympo::build_mpo(polympo::solve_coefficients(k));
  const auto ops = polympo::LocalOperatorPair::nilpotent();
  for (auto _ : state) {
    auto h = polympo::contract_mpo(mpo, ops, L);
    benchmark::DoNotOptimize(h.data());
  }
}
BENCHMARK(BM_ContractNilpotent)
    ->ArgsProduct({{1, 4}, {4, 6, 8, 10}})
    ->Unit(benchmark::kMillisecond);

void BM_PairCoefficient(benchmark::State& state) {
  const auto mpo = polympo::build_mpo(polympo::solve_coefficients(static_cast<int>(state.range(0))));
  const int r = static_cast<int>(state.range(1));
  for (auto _ : state) {
    auto c = polympo::pair_coefficient(mpo, r + 1, 1, r + 1);
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(BM_PairCoefficient)->ArgsProduct({{2, 6, 10}, {10, 60}})->Unit(benchmark::kMicrosecond);

}  // namespace
