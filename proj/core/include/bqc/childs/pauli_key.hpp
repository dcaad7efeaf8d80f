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
#include "bqc/quantum/random.hpp"
#include "bqc/quantum/state_vector.hpp"

namespace bqc {

/// One-time pad prod_q X^{x_q} Z^{z_q}; phases are not tracked.
struct PauliKey {
  std::vector<Bit> x;
  std::vector<Bit> z;

  static PauliKey zero(std::size_t n) { return {std::vector<Bit>(n, 0), std::vector<Bit>(n, 0)}; }
  static PauliKey random(std::size_t n, Rng& rng);
  /// Key number `index` in [0, 4^n): qubit q takes bits 2q (x) and 2q+1 (z).
  static PauliKey from_index(std::size_t n, std::size_t index);

  std::size_t size() const { return x.size(); }
  bool operator==(const PauliKey&) const = default;
};

/// X^{x_q} Z^{z_q} on every qubit.
StateVector qotp_encrypt(StateVector state, const PauliKey& key);
/// Inverse of qotp_encrypt.
StateVector qotp_decrypt(StateVector state, const PauliKey& key);

/// Key after the server applies a Clifford gate g to the encrypted state, so
/// that decrypting with the new key yields g applied to the plaintext.
/// Supports H, S, CNOT, CZ and the Paulis; throws InvalidArgument otherwise.
PauliKey key_update_clifford(PauliKey key, const Gate& g);

/// Key after the client applies the Pauli gate g to the plaintext without
/// touching the ciphertext.
PauliKey key_absorb_pauli(PauliKey key, const Gate& g);

}  // namespace bqc
