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

#include "bqc/mbqc/circuit.hpp"

#include <string>

#include "bqc/errors.hpp"

namespace bqc {

void Circuit::validate() const {
  if (wires == 0) throw InvalidArgument("circuit needs at least one wire");
  for (std::size_t i = 0; i < gates.size(); ++i) {
    const Gate& g = gates[i];
    const std::string where = "gate " + std::to_string(i) + " (" + std::string(gate_name(g.kind)) + ")";
    if (g.targets[0] >= wires) throw InvalidArgument(where + ": wire out of range");
    if (g.arity() == 2) {
      std::size_t a = g.targets[0], b = g.targets[1];
      if (b >= wires) throw InvalidArgument(where + ": wire out of range");
      if (a + 1 != b && b + 1 != a) throw InvalidArgument(where + ": two-qubit gates need adjacent wires");
    }
  }
}

StateVector simulate_circuit(const Circuit& c, const StateVector& input) {
  c.validate();
  if (input.qubits() != c.wires) throw InvalidArgument("input width does not match circuit");
  StateVector s = input;
  for (const Gate& g : c.gates) apply(s, g);
  return s;
}

StateVector simulate_circuit(const Circuit& c) {
  c.validate();
  return simulate_circuit(c, StateVector::plus(c.wires));
}

Eigen::MatrixXcd circuit_unitary(const Circuit& c) {
  c.validate();
  if (c.wires > 6) throw CapacityError("circuit_unitary is limited to 6 wires");
  const std::size_t dim = std::size_t{1} << c.wires;
  Eigen::MatrixXcd u(dim, dim);
  for (std::size_t j = 0; j < dim; ++j) {
    StateVector s = StateVector::basis(c.wires, j);
    for (const Gate& g : c.gates) apply(s, g);
    for (std::size_t i = 0; i < dim; ++i) u(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = s[i];
  }
  return u;
}

}  // namespace bqc
