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

#include "bqc/childs/pauli_key.hpp"

#include <string>

#include "bqc/errors.hpp"

namespace bqc {

PauliKey PauliKey::random(std::size_t n, Rng& rng) {
  PauliKey k = zero(n);
  for (std::size_t q = 0; q < n; ++q) {
    k.x[q] = rng.bit();
    k.z[q] = rng.bit();
  }
  return k;
}

PauliKey PauliKey::from_index(std::size_t n, std::size_t index) {
  PauliKey k = zero(n);
  for (std::size_t q = 0; q < n; ++q) {
    k.x[q] = static_cast<Bit>((index >> (2 * q)) & 1);
    k.z[q] = static_cast<Bit>((index >> (2 * q + 1)) & 1);
  }
  return k;
}

namespace {

void check_size(const StateVector& s, const PauliKey& k) {
  if (k.size() != s.qubits())
    throw InvalidArgument("key covers " + std::to_string(k.size()) + " qubits, state has " +
                          std::to_string(s.qubits()));
}

void check_target(const PauliKey& k, std::size_t q) {
  if (q >= k.size()) throw InvalidArgument("gate target outside the key");
}

}  // namespace

StateVector qotp_encrypt(StateVector state, const PauliKey& key) {
  check_size(state, key);
  for (std::size_t q = 0; q < key.size(); ++q) {
    if (key.z[q]) apply_pauli(state, q, Pauli::kZ);
    if (key.x[q]) apply_pauli(state, q, Pauli::kX);
  }
  return state;
}

StateVector qotp_decrypt(StateVector state, const PauliKey& key) {
  check_size(state, key);
  for (std::size_t q = 0; q < key.size(); ++q) {
    if (key.x[q]) apply_pauli(state, q, Pauli::kX);
    if (key.z[q]) apply_pauli(state, q, Pauli::kZ);
  }
  return state;
}

PauliKey key_update_clifford(PauliKey key, const Gate& g) {
  const std::size_t a = g.targets[0], b = g.targets[1];
  check_target(key, a);
  if (g.arity() == 2) {
    check_target(key, b);
    if (a == b) throw InvalidArgument("two-qubit gate on a single wire");
  }
  switch (g.kind) {
    case GateKind::kH: std::swap(key.x[a], key.z[a]); break;
    case GateKind::kS: key.z[a] ^= key.x[a]; break;
    case GateKind::kX:
    case GateKind::kY:
    case GateKind::kZ: break;
    case GateKind::kCNOT:
      key.x[b] ^= key.x[a];
      key.z[a] ^= key.z[b];
      break;
    case GateKind::kCZ:
      key.z[b] ^= key.x[a];
      key.z[a] ^= key.x[b];
      break;
    default: throw InvalidArgument(std::string(gate_name(g.kind)) + " is not a supported Clifford gate");
  }
  return key;
}

PauliKey key_absorb_pauli(PauliKey key, const Gate& g) {
  const std::size_t q = g.targets[0];
  check_target(key, q);
  switch (g.kind) {
    case GateKind::kX: key.x[q] ^= 1; break;
    case GateKind::kY: key.x[q] ^= 1, key.z[q] ^= 1; break;
    case GateKind::kZ: key.z[q] ^= 1; break;
    default: throw InvalidArgument(std::string(gate_name(g.kind)) + " is not a Pauli gate");
  }
  return key;
}

}  // namespace bqc
