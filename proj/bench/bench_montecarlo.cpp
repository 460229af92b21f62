// Copyright 2026 The nmimo Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Serial reference vs OpenMP kernel for the Monte Carlo estimators.

#include <benchmark/benchmark.h>

#include "nmimo/montecarlo.hpp"

namespace {

nmimo::SystemConfig bench_config(int users) { return nmimo::SystemConfig{3, 8, users, 0.0, 2000, 7}; }

void BM_ErgodicSerial(benchmark::State& state) {
  const auto cfg = bench_config(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(nmimo::serial::estimate_ergodic_rates(cfg, nmimo::kZfVector));
  state.SetItemsProcessed(state.iterations() * cfg.trials);
}

void BM_ErgodicOpenMP(benchmark::State& state) {
  const auto cfg = bench_config(static_cast<int>(state.range(0)));
  const nmimo::Workers workers{static_cast<int>(state.range(1))};
  for (auto _ : state) benchmark::DoNotOptimize(nmimo::estimate_ergodic_rates(cfg, nmimo::kZfVector, workers));
  state.SetItemsProcessed(state.iterations() * cfg.trials);
}

void BM_WishartSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(nmimo::serial::estimate_wishart_trace(24, 12, 2000, 3));
  state.SetItemsProcessed(state.iterations() * 2000);
}

void BM_WishartOpenMP(benchmark::State& state) {
  const nmimo::Workers workers{static_cast<int>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(nmimo::estimate_wishart_trace(24, 12, 2000, 3, workers));
  state.SetItemsProcessed(state.iterations() * 2000);
}

}  // namespace

BENCHMARK(BM_ErgodicSerial)->Arg(4)->Arg(12)->Arg(24)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ErgodicOpenMP)->ArgsProduct({{4, 12, 24}, {1, 2, 4}})->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_WishartSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_WishartOpenMP)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
