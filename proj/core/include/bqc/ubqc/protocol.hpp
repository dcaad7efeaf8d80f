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
#include <map>
#include <optional>
#include <vector>

#include "bqc/harness/transcript.hpp"
#include "bqc/mbqc/pattern.hpp"
#include "bqc/quantum/random.hpp"
#include "bqc/quantum/state_vector.hpp"
#include "bqc/ubqc/adversary.hpp"
#include "bqc/ubqc/client.hpp"

namespace bqc {

struct UbqcOptions {
  std::optional<StateVector> input;
  DeltaRule rule = DeltaRule::kStandard;
  Adversary* adversary = nullptr;  // honest when null
  /// Server measurement results in order; sampled when unset.
  std::optional<std::vector<Bit>> forced_outcomes;
  std::map<std::size_t, VertexKey> fixed_keys;
};

struct UbqcRun {
  Transcript transcript;
  StateVector output{1};
  std::vector<Bit> decoded;    // m per vertex
  std::vector<Bit> reported;   // b per vertex
  std::vector<Angle8> deltas;  // per vertex (measured ones)
  double branch_probability = 1.0;
  SecretSet secrets;
};

/// One UBQC session over a fresh channel. Client, server and adversary draw
/// from independent forks of rng.
UbqcRun run_ubqc(const MeasurementPattern& p, Rng& rng, const UbqcOptions& opts = {});

}  // namespace bqc
