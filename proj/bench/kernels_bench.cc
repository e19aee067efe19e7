// Copyright 2026 The traitnorm Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Parallel kernels against their serial references on synthetic graphs.

#include <benchmark/benchmark.h>

#include "traitnorm/metrics.h"
#include "traitnorm/normalizer.h"
#include "traitnorm/synth.h"

namespace traitnorm {
namespace {

SyntheticGraph Make(int64_t nodes) {
  SyntheticSpec spec;
  spec.seed = 11;
  spec.nodes = static_cast<size_t>(nodes);
  spec.keys = 8;
  spec.distinct = 64;
  spec.edge_metadata = true;
  return GenerateSynthetic(spec);
}

void BM_ProfileKeys(benchmark::State& state) {
  SyntheticGraph s = Make(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ProfileKeys(s.graph));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_ProfileKeysSerial(benchmark::State& state) {
  SyntheticGraph s = Make(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ProfileKeysSerial(s.graph));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_Measure(benchmark::State& state) {
  SyntheticGraph s = Make(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(Measure(s.graph, s.families));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_MeasureSerial(benchmark::State& state) {
  SyntheticGraph s = Make(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(MeasureSerial(s.graph, s.families));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

BENCHMARK(BM_ProfileKeys)->RangeMultiplier(4)->Range(1 << 10, 1 << 16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ProfileKeysSerial)->RangeMultiplier(4)->Range(1 << 10, 1 << 16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Measure)->RangeMultiplier(4)->Range(1 << 10, 1 << 16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MeasureSerial)->RangeMultiplier(4)->Range(1 << 10, 1 << 16)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace traitnorm

BENCHMARK_MAIN();
