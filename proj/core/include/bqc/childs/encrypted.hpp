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

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "bqc/childs/pauli_key.hpp"
#include "bqc/harness/channel.hpp"
#include "bqc/harness/transcript.hpp"
#include "bqc/mbqc/circuit.hpp"
#include "bqc/quantum/density_matrix.hpp"
#include "bqc/quantum/random.hpp"

namespace bqc {

/// Client side of an encrypted-compute session. The client keeps the whole
/// register between rounds; each round re-pads the targets with fresh keys,
/// sends them with a gate request and receives them back. The register is
/// the data qubits followed by an ancilla pair in |0>.
class ChildsSession {
 public:
  static constexpr std::size_t kAncillas = 2;

  ChildsSession(ProtocolId protocol, const StateVector& plaintext, Rng& rng,
                std::optional<PauliKey> initial_key = std::nullopt);

  std::size_t data_qubits() const { return data_; }
  std::size_t ancilla(std::size_t i) const { return data_ + i; }
  const PauliKey& key() const { return key_; }

  /// One Clifford round (H, S, CNOT or CZ) on any register qubits.
  void request(const Gate& g);
  /// Pauli gates are absorbed into the key; no round is needed.
  void apply_pauli_gate(const Gate& g);
  /// T round on q, then always an S round: on q when x_q was 1 at the time T
  /// was applied, on ancilla 0 otherwise. Returns whether S landed on q.
  bool apply_t_gadget(std::size_t q);

  /// Decrypted register (data then ancillas).
  StateVector decrypt_all() const;
  /// Decrypted data qubits (ancillas traced out).
  DensityMatrix decrypt_data() const;
  /// Ciphertext currently held.
  StateVector ciphertext() const;

  std::size_t rounds() const { return rounds_; }
  /// Closes the channel and returns the transcript.
  Transcript finish();

 private:
  void round(GateKind kind, std::array<std::size_t, 2> targets);

  Channel channel_;
  Rng& rng_;
  std::size_t data_;
  PauliKey key_;
  std::vector<QubitId> ids_;
  std::size_t rounds_ = 0;
};

struct EncryptedRun {
  Transcript transcript;
  DensityMatrix output = DensityMatrix::maximally_mixed(1);  // data qubits
  std::size_t rounds = 0;
  std::size_t cycles = 0;  // hidden mode only
};

/// Gates accepted: H, S, T, CNOT, CZ and X, Y, Z (any distinct wires).
void validate_encrypted_circuit(const Circuit& c);

/// Interactive evaluation, one round per gate (two for T).
EncryptedRun run_encrypted_circuit(const Circuit& c, const StateVector& input, Rng& rng);

/// Cycles needed when gates are packed greedily into (H, CNOT, T, S) cycles;
/// a T uses its cycle's S slot for the correction and CZ becomes H CNOT H.
std::size_t hidden_cycle_count(const Circuit& c);

/// Hidden-circuit mode: every cycle issues H, CNOT, T, S in that order, with
/// unused slots aimed at the ancilla pair. Pads to `min_cycles` when given.
/// Throws InvalidArgument when min_cycles is below hidden_cycle_count.
EncryptedRun run_hidden_circuit(const Circuit& c, const StateVector& input, Rng& rng,
                                std::optional<std::size_t> min_cycles = std::nullopt);

/// Records without the session header: what the server saw, byte for byte.
Bytes request_trace(const Transcript& t);

}  // namespace bqc
