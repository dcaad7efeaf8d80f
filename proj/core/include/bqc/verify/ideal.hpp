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

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "bqc/mbqc/circuit.hpp"
#include "bqc/quantum/density_matrix.hpp"
#include "bqc/quantum/state_vector.hpp"
#include "bqc/ubqc/client.hpp"

namespace bqc {

enum class IdealMode : std::uint8_t {
  kBlind,       // server bit b: 0 computes U, 1 hands the joint input to the server's map
  kBlindVerif,  // server bit c: 0 computes U, 1 outputs the error flag
};

/// The black-box functionality a delegation protocol is compared against.
/// In kBlindVerif mode the output carries one extra flag qubit (the last),
/// |0> on success and |1> (data |0...0>) for the error state.
struct IdealResource {
  IdealMode mode = IdealMode::kBlind;
  Eigen::MatrixXcd unitary;
};

using DeviationMap = std::function<DensityMatrix(const DensityMatrix&)>;

/// What a (possibly dishonest) server feeds the ideal resource.
struct ServerInputs {
  Bit flag = 0;
  DeviationMap deviation;           // blind mode, flag 1
  std::optional<StateVector> psi_b;  // server's own input; none means empty
};

/// Throws InvalidArgument when psi_a does not fit the unitary or the blind-mode
/// deviation map is missing for flag 1.
DensityMatrix ideal_resource_eval(const IdealResource& ideal, const StateVector& psi_a,
                                  const ServerInputs& server = {});

/// A protocol as a channel from client input to client output.
using ProtocolChannel = std::function<DensityMatrix(const StateVector&)>;

/// Largest trace distance, over the inputs, between the channel and the
/// ideal resource with an honest server (flag 0). With `dephase` the ideal
/// output is measured in the computational basis first (for protocols that
/// only return classical bits). Throws InvalidArgument on an empty input set
/// or a dimension mismatch.
double epsilon_correctness(const ProtocolChannel& channel, const IdealResource& ideal,
                           std::span<const StateVector> inputs, bool dephase = false);

/// Honest protocol modes the harness can wrap as channels.
enum class ProtocolMode : std::uint8_t {
  kUbqc,
  kUbqcTrapped,  // one trap row appended; rejected sessions output the error flag
  kClientMeasuring,
  kTwoServer,
  kChilds,
  kChildsHidden,
};

std::string_view protocol_mode_name(ProtocolMode m);

/// Whether the mode only accepts computational-basis or |+>^n inputs (the
/// client has no quantum input channel; the input is prepared by a circuit
/// prefix instead).
bool classical_input_only(ProtocolMode m);

/// Ideal resource matching what the mode returns: kBlindVerif for the
/// trapped mode, kBlind otherwise.
IdealResource ideal_for(ProtocolMode m, const Circuit& c);

/// Wraps an honest run of circuit c in the given mode as a channel. Every
/// MBQC-based mode sums over all measurement branches with their Born
/// weights, keys fixed by `seed`; the encrypted-compute modes need no
/// branching. kTwoServer returns the diagonal output-bit distribution.
ProtocolChannel protocol_channel(ProtocolMode m, const Circuit& c, std::uint64_t seed,
                                 DeltaRule rule = DeltaRule::kStandard);

/// The fixed battery: every computational basis state, |+>^n, and (unless
/// classical_only) three seeded random states.
std::vector<StateVector> input_battery(std::size_t n, bool classical_only);

/// epsilon_correctness of the mode on its battery, dephased for kTwoServer.
double mode_epsilon(ProtocolMode m, const Circuit& c, std::uint64_t seed, DeltaRule rule = DeltaRule::kStandard);

}  // namespace bqc
