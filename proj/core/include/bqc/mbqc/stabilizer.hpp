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

#pragma once

#include <cstddef>

#include "bqc/mbqc/graph.hpp"
#include "bqc/quantum/measure.hpp"
#include "bqc/quantum/state_vector.hpp"

namespace bqc {

/// K_v = X_v prod_{w in N(v)} Z_w, with qubit index = vertex id.
PauliString stabilizer_generator(const Graph& g, std::size_t v);

/// Measures K_v on `state` (collapsing it). Outcome 0 is the +1 eigenvalue.
Outcome stabilizer_check(StateVector& state, const Graph& g, std::size_t v, OutcomeSource& src);
Outcome stabilizer_check(StateVector& state, const Graph& g, std::size_t v, Rng& rng);

}  // namespace bqc
