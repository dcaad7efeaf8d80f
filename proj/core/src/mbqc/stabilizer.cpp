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

#include "bqc/mbqc/stabilizer.hpp"

#include <string>

#include "bqc/errors.hpp"

namespace bqc {

PauliString stabilizer_generator(const Graph& g, std::size_t v) {
  if (v >= g.vertex_count()) throw InvalidArgument("vertex out of range: " + std::to_string(v));
  PauliString k;
  k.factors.emplace_back(v, Pauli::kX);
  for (std::size_t w : g.neighbors(v)) k.factors.emplace_back(w, Pauli::kZ);
  return k;
}

Outcome stabilizer_check(StateVector& state, const Graph& g, std::size_t v, OutcomeSource& src) {
  if (state.qubits() != g.vertex_count()) throw InvalidArgument("state does not match the graph");
  return measure_pauli(state, stabilizer_generator(g, v), src);
}

Outcome stabilizer_check(StateVector& state, const Graph& g, std::size_t v, Rng& rng) {
  OutcomeSource src = OutcomeSource::sampled(rng);
  return stabilizer_check(state, g, v, src);
}

}  // namespace bqc
