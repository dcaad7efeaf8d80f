// Copyright 2026 The bqclab Authors
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


#include <benchmark/benchmark.h>

#include "bqc/mbqc/graph.hpp"
#include "bqc/quantum/density_matrix.hpp"
#include "bqc/quantum/gates.hpp"
#include "bqc/quantum/measure.hpp"
#include "bqc/quantum/random.hpp"
#include "bqc/quantum/state_vector.hpp"

namespace {

using namespace bqc;

void BM_SingleQubitGate(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Rng rng(1);
  StateVector s = StateVector::random(n, rng);
  std::size_t q = 0;
  for (auto _ : state) {
    apply(s, Gate::h(q));
    q = (q + 1) % n;
    benchmark::DoNotOptimize(s.amplitudes().data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(s.dimension()));
}
BENCHMARK(BM_SingleQubitGate)->DenseRange(4, 18, 2);

void BM_Cnot(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Rng rng(2);
  StateVector s = StateVector::random(n, rng);
  for (auto _ : state) {
    apply(s, Gate::cnot(0, n - 1));
    benchmark::DoNotOptimize(s.amplitudes().data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(s.dimension()));
}
BENCHMARK(BM_Cnot)->DenseRange(4, 18, 2);

void BM_MeasureXY(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Rng rng(3);
  const StateVector base = StateVector::random(n, rng);
  for (auto _ : state) {
    StateVector s = base;
    benchmark::DoNotOptimize(measure_xy(s, n / 2, Angle8(3), rng));
  }
}
BENCHMARK(BM_MeasureXY)->DenseRange(4, 16, 4);

void BM_GraphState(benchmark::State& state) {
  const auto cols = static_cast<std::size_t>(state.range(0));
  const BrickworkGraph g(2, cols);
  for (auto _ : state) benchmark::DoNotOptimize(graph_state(g.graph()));
}
BENCHMARK(BM_GraphState)->DenseRange(3, 9, 2);

void BM_TraceDistance(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Rng rng(4);
  const DensityMatrix a = DensityMatrix::pure(StateVector::random(n, rng));
  const DensityMatrix b = DensityMatrix::pure(StateVector::random(n, rng));
  for (auto _ : state) benchmark::DoNotOptimize(trace_distance(a, b));
}
BENCHMARK(BM_TraceDistance)->DenseRange(1, 7, 2);

}  // namespace

BENCHMARK_MAIN();
