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

#include "keycheck.hpp"

#include <vector>

#include "bqc/childs/pauli_key.hpp"
#include "bqc/quantum/gates.hpp"
#include "json.hpp"

namespace bqc::tools {

namespace {

using json = nlohmann::json;

// Dense X^x Z^z on n qubits; qubit q is bit q of the index.
Eigen::MatrixXcd key_operator(const PauliKey& k) {
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Identity(1, 1);
  for (std::size_t q = 0; q < k.size(); ++q) {
    const Mat2 m = pauli_matrix(k.x[q] ? Pauli::kX : Pauli::kI) * pauli_matrix(k.z[q] ? Pauli::kZ : Pauli::kI);
    Eigen::MatrixXcd next(out.rows() * 2, out.cols() * 2);
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b) next.block(a * out.rows(), b * out.cols(), out.rows(), out.cols()) = m(a, b) * out;
    out = next;
  }
  return out;
}

Eigen::MatrixXcd gate_operator(const Gate& g, std::size_t n) {
  const std::size_t dim = std::size_t{1} << n;
  Eigen::MatrixXcd u(dim, dim);
  for (std::size_t i = 0; i < dim; ++i) {
    StateVector e = StateVector::basis(n, i);
    apply(e, g);
    for (std::size_t j = 0; j < dim; ++j) u(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(i)) = e[j];
  }
  return u;
}

// U P U^dag must equal the updated key up to a phase.
bool matches(const Eigen::MatrixXcd& u, const PauliKey& before, const PauliKey& after) {
  return equal_up_to_phase(u * key_operator(before) * u.adjoint(), key_operator(after));
}

std::string key_label(const PauliKey& k) {
  std::string s;
  for (std::size_t q = 0; q < k.size(); ++q) {
    s += k.x[q] ? (k.z[q] ? 'Y' : 'X') : (k.z[q] ? 'Z' : 'I');
  }
  return s;
}

}  // namespace

KeycheckResult keycheck(std::size_t trials, Rng& rng) {
  KeycheckResult res;
  json table = json::array();
  const std::vector<Gate> generators = {Gate::h(0),       Gate::s(0),       Gate::x(0),    Gate::y(0), Gate::z(0),
                                        Gate::cnot(0, 1), Gate::cnot(1, 0), Gate::cz(0, 1)};
  for (const Gate& g : generators) {
    const std::size_t n = g.arity();
    const Eigen::MatrixXcd u = gate_operator(g, n);
    for (std::size_t idx = 0; idx < (std::size_t{1} << (2 * n)); ++idx) {
      const PauliKey before = PauliKey::from_index(n, idx);
      const PauliKey after = key_update_clifford(before, g);
      const bool ok = matches(u, before, after);
      ++res.table_entries;
      if (!ok) ++res.table_mismatches;
      table.push_back({{"gate", std::string(gate_name(g.kind))},
                       {"targets", g.arity() == 2 ? json::array({g.targets[0], g.targets[1]}) : json::array({g.targets[0]})},
                       {"key", key_label(before)},
                       {"updated", key_label(after)},
                       {"match", ok}});
    }
  }

  constexpr std::size_t kWires = 3, kDepth = 20;
  for (std::size_t t = 0; t < trials; ++t) {
    Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(8, 8);
    PauliKey key = PauliKey::random(kWires, rng);
    const PauliKey start = key;
    for (std::size_t d = 0; d < kDepth; ++d) {
      const std::size_t a = rng.below(kWires), b = (a + 1 + rng.below(kWires - 1)) % kWires;
      Gate g;
      switch (rng.below(4)) {
        case 0: g = Gate::h(a); break;
        case 1: g = Gate::s(a); break;
        case 2: g = Gate::cnot(a, b); break;
        default: g = Gate::cz(a, b);
      }
      u = gate_operator(g, kWires) * u;
      key = key_update_clifford(key, g);
    }
    ++res.circuits;
    if (!matches(u, start, key)) ++res.circuit_mismatches;
  }

  const json doc = {{"table", std::move(table)},
                    {"table_entries", res.table_entries},
                    {"table_mismatches", res.table_mismatches},
                    {"random_circuits", res.circuits},
                    {"random_circuit_mismatches", res.circuit_mismatches},
                    {"ok", res.ok()}};
  res.report = doc.dump(1) + "\n";
  return res;
}

}  // namespace bqc::tools
