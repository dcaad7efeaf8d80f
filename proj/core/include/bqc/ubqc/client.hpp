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
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "bqc/harness/transcript.hpp"
#include "bqc/mbqc/pattern.hpp"
#include "bqc/quantum/qubit_register.hpp"
#include "bqc/quantum/random.hpp"
#include "bqc/quantum/state_vector.hpp"

namespace bqc {

/// kMisSignedCanary sends phi' + theta; it exists only to check that the
/// correctness harness notices a wrong sign.
enum class DeltaRule : std::uint8_t { kStandard, kMisSignedCanary };

struct VertexKey {
  Bit r = 0;
  Angle8 theta{};
  bool operator==(const VertexKey&) const = default;
};

struct ClientOptions {
  /// Logical input on the computation rows; |+>^w when unset.
  std::optional<StateVector> input;
  DeltaRule rule = DeltaRule::kStandard;
  /// Keys fixed in advance (trap keys); sampled keys are replaced.
  std::map<std::size_t, VertexKey> fixed_keys;
};

/// Client secrets and progress. The stored theta is what the delta formula
/// uses; the qubit itself is prepared with -theta so that measuring at
/// delta = phi' - theta realizes phi'.
struct ClientState {
  MeasurementPattern pattern;
  std::vector<Bit> r;
  std::vector<Angle8> theta;
  std::vector<Bit> input_x;  // one-time-pad X on quantum inputs
  StaticFrame frame;
  std::vector<Bit> m;
  std::size_t cursor = 0;  // index into pattern.order()
  DeltaRule rule = DeltaRule::kStandard;
  std::optional<StateVector> input;
};

/// Samples (r, theta) for every vertex (and x for explicit inputs).
ClientState client_init(const MeasurementPattern& p, Rng& rng, const ClientOptions& opts = {});

/// Single-qubit payload for v: |d> for dummies, otherwise
/// (|0> + (-1)^r e^{-i theta}|1>)/sqrt2. Throws for explicit-input vertices.
StateVector payload_state(const ClientState& cs, std::size_t v);

/// Adds every payload to `world`; returns the qubit of each vertex. Explicit
/// inputs are encrypted jointly as Z^r Rz(-theta) X^x per input qubit.
std::vector<QubitId> prepare_payloads(const ClientState& cs, QubitRegister& world);

/// delta = adapt_angle(phi, sX, sZ) - theta for the next vertex in order.
/// Throws ProtocolError if v is not that vertex.
Angle8 client_delta(const ClientState& cs, std::size_t v);

/// m = b XOR r; advances the cursor. Throws ProtocolError out of order.
Bit client_decode(ClientState& cs, std::size_t v, Bit b);

/// Undoes the pad and Pauli frame on the returned last column (row order);
/// dummies are measured out with rng. Returns the logical output, output row
/// order.
StateVector client_decrypt_outputs(const ClientState& cs, QubitRegister& world, const std::vector<QubitId>& last_column,
                                   Rng& rng);

/// Serialized forms of every secret (THETA, R, PHI, X tokens) for leak scans.
SecretSet client_secrets(const ClientState& cs);

}  // namespace bqc
