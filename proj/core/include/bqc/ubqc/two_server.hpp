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

#include <optional>
#include <vector>

#include "bqc/harness/transcript.hpp"
#include "bqc/mbqc/pattern.hpp"
#include "bqc/quantum/random.hpp"
#include "bqc/ubqc/adversary.hpp"
#include "bqc/ubqc/client.hpp"

namespace bqc {

struct TwoServerOptions {
  DeltaRule rule = DeltaRule::kStandard;
  Adversary* adversary = nullptr;  // deviations of server 1; honest when null
  /// Every quantum outcome in session order: server 2's preparation
  /// measurements, server 1's rounds, then the output readout.
  std::optional<std::vector<Bit>> forced_outcomes;
};

struct TwoServerRun {
  /// Both servers' traffic; the two servers never appear as a pair.
  Transcript transcript;
  /// Decoded computational-basis readout of the outputs, output row order.
  std::vector<Bit> output_bits;
  std::vector<Bit> decoded;
  double branch_probability = 1.0;
  SecretSet secrets;
};

/// Classical-client UBQC: server 2 measures its half of each shared pair at a
/// client-chosen random angle alpha and reports s, leaving server 1 with the
/// pad (r, theta) = (s, -alpha); the session then runs as UBQC with server 1
/// and ends with a Z readout of the last column. Patterns with dummies or
/// traps are rejected (they would need a computational-basis preparation).
TwoServerRun run_two_server(const MeasurementPattern& p, Rng& rng, const TwoServerOptions& opts = {});

}  // namespace bqc
