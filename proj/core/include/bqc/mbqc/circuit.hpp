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
#include <vector>

#include "bqc/quantum/gates.hpp"
#include "bqc/quantum/state_vector.hpp"

namespace bqc {

/// Gate list on `wires` logical qubits. Two-qubit gates act on adjacent wires.
struct Circuit {
  std::size_t wires = 1;
  std::vector<Gate> gates;

  /// Throws InvalidArgument on bad wire indices or non-adjacent two-qubit gates.
  void validate() const;
  bool operator==(const Circuit&) const = default;
};

/// Direct state-vector simulation; input defaults to |+>^wires.
StateVector simulate_circuit(const Circuit& c, const StateVector& input);
StateVector simulate_circuit(const Circuit& c);

/// Dense unitary of the circuit (wires <= 6).
Eigen::MatrixXcd circuit_unitary(const Circuit& c);

}  // namespace bqc
