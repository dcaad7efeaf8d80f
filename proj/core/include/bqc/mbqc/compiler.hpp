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

#include "bqc/mbqc/circuit.hpp"
#include "bqc/mbqc/pattern.hpp"

namespace bqc {

/// Compiles a nearest-neighbour circuit onto a brickwork pattern with one row
/// per wire. Gates are scheduled greedily into 4-column steps: even steps
/// host bricks on wire pairs (0,1), (2,3), ..., odd steps on (1,2), (3,4), ...;
/// a gate is fused into the latest step touching its wires whenever the
/// combined unitary still fits one cell. CZ is expanded to H CNOT H.
///
/// Honest execution on |+>^wires inputs reproduces the circuit up to global
/// phase. The result has 4 * steps + 1 columns (1 for an empty circuit).
MeasurementPattern compile_circuit(const Circuit& c);

/// Number of 4-column steps in a compiled pattern.
inline std::size_t compiled_steps(const MeasurementPattern& p) { return (p.graph().cols() - 1) / 4; }

}  // namespace bqc
