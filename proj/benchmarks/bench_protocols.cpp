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

#include <vector>

#include "bqc/childs/encrypted.hpp"
#include "bqc/mbqc/circuit.hpp"
#include "bqc/mbqc/compiler.hpp"
#include "bqc/mbqc/executor.hpp"
#include "bqc/quantum/random.hpp"
#include "bqc/ubqc/audit.hpp"
#include "bqc/ubqc/protocol.hpp"
#include "bqc/ubqc/two_server.hpp"

namespace {

using namespace bqc;

Circuit ladder(std::size_t wires, std::size_t layers) {
  Circuit c{wires, {}};
  for (std::size_t l = 0; l < layers; ++l) {
    for (std::size_t q = 0; q < wires; ++q) c.gates.push_back(l % 2 ? Gate::t(q) : Gate::h(q));
    for (std::size_t q = l % 2; q + 1 < wires; q += 2) c.gates.push_back(Gate::cnot(q, q + 1));
  }
  return c;
}

void BM_Compile(benchmark::State& state) {
  const Circuit c = ladder(static_cast<std::size_t>(state.range(0)), 8);
  for (auto _ : state) benchmark::DoNotOptimize(compile_circuit(c));
}
BENCHMARK(BM_Compile)->DenseRange(1, 5, 2);

void BM_RunPatternStreaming(benchmark::State& state) {
  const MeasurementPattern p = compile_circuit(ladder(static_cast<std::size_t>(state.range(0)), 4));
  Rng rng(1);
  for (auto _ : state) benchmark::DoNotOptimize(run_pattern(p, rng, {ExecutionMode::kStreaming, std::nullopt}));
  state.counters["vertices"] = static_cast<double>(p.vertex_count());
}
BENCHMARK(BM_RunPatternStreaming)->DenseRange(1, 4, 1);

void BM_RunUbqc(benchmark::State& state) {
  const MeasurementPattern p = compile_circuit(ladder(static_cast<std::size_t>(state.range(0)), 1));
  Rng rng(2);
  for (auto _ : state) benchmark::DoNotOptimize(run_ubqc(p, rng));
  state.counters["vertices"] = static_cast<double>(p.vertex_count());
}
BENCHMARK(BM_RunUbqc)->DenseRange(1, 3, 1);

void BM_RunTwoServer(benchmark::State& state) {
  const MeasurementPattern p = compile_circuit(ladder(static_cast<std::size_t>(state.range(0)), 1));
  Rng rng(3);
  for (auto _ : state) benchmark::DoNotOptimize(run_two_server(p, rng));
}
BENCHMARK(BM_RunTwoServer)->DenseRange(1, 3, 1);

void BM_ExactAuditView(benchmark::State& state) {
  const auto cols = static_cast<std::size_t>(state.range(0));
  const MeasurementPattern p = MeasurementPattern::computation(1, cols, std::vector<Angle8>(cols - 1, Angle8(1)));
  const PatternEnsemble e{{1.0, p}};
  for (auto _ : state) benchmark::DoNotOptimize(server_view_exact(e));
}
BENCHMARK(BM_ExactAuditView)->DenseRange(2, 4, 1)->Unit(benchmark::kMillisecond);

void BM_EncryptedCircuit(benchmark::State& state) {
  const auto wires = static_cast<std::size_t>(state.range(0));
  const Circuit c = ladder(wires, 6);
  Rng rng(4);
  for (auto _ : state) benchmark::DoNotOptimize(run_encrypted_circuit(c, StateVector::plus(wires), rng));
}
BENCHMARK(BM_EncryptedCircuit)->DenseRange(1, 5, 2);

}  // namespace

BENCHMARK_MAIN();
