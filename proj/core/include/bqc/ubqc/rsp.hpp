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

#include "bqc/quantum/measure.hpp"
#include "bqc/quantum/random.hpp"
#include "bqc/quantum/state_vector.hpp"

namespace bqc {

enum class BellState : std::uint8_t { kPhiPlus, kPhiMinus, kPsiPlus, kPsiMinus };

StateVector bell_state(BellState b);

/// Pair shared for remote preparation: measuring either half at |+-_theta>
/// with outcome s leaves the other half in |+-_theta> with the same sign.
inline constexpr BellState kRspPair = BellState::kPsiPlus;

struct RspResult {
  Outcome outcome;
  StateVector remote{1};
};

/// Measures qubit 0 of a two-qubit pair at angle theta; returns the outcome
/// and the state left on qubit 1.
RspResult rsp_measure(const StateVector& pair, Angle8 theta, OutcomeSource& src);
RspResult rsp_measure(const StateVector& pair, Angle8 theta, Rng& rng);

}  // namespace bqc
