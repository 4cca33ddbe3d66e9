// Copyright 2026 The biuniv Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "biuniv/caratheodory_sampler.hpp"
#include "biuniv/closed_form_bounds.hpp"
#include "biuniv/oracle_optimizer.hpp"

namespace {

using namespace biuniv;

void BM_Hankel2Bound(benchmark::State& state) {
  double beta = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(hankel2_bound(ClassParams(0.5, beta)).value);
    beta = beta > 0.98 ? 0.0 : beta + 0.01;
  }
}
BENCHMARK(BM_Hankel2Bound);

void BM_InitialCoefficientBounds(benchmark::State& state) {
  const MindaPhi phi(1.7, -0.4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(a2_bound(phi, 0.3).value);
    benchmark::DoNotOptimize(a3_bound(phi, 0.3).value);
  }
}
BENCHMARK(BM_InitialCoefficientBounds);

void BM_MaximizeSquare(benchmark::State& state) {
  const double res = 1.0 / static_cast<double>(state.range(0));
  const ProofCoefficients t = t_coefficients(1.1, ClassParams(0.25, 0.4));
  for (auto _ : state) benchmark::DoNotOptimize(maximize_f_on_square(t, res).max_value);
}
BENCHMARK(BM_MaximizeSquare)->Arg(20)->Arg(100)->Arg(200);

void BM_MaximizeInterval(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(maximize_k_on_interval(ClassParams(0.5, 0.6), 0.005).max_value);
}
BENCHMARK(BM_MaximizeInterval);

void BM_SamplePair(benchmark::State& state) {
  SeedStream stream(42);
  const ClassParams params(0.5, 0.2);
  for (auto _ : state) benchmark::DoNotOptimize(sample_pair(stream, params));
}
BENCHMARK(BM_SamplePair);

void BM_SampleHankelBatch(benchmark::State& state) {
  const auto target = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sample_hankel(ClassParams(0.5, 0.2), target, 42).max_functional);
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SampleHankelBatch)->Arg(10000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
