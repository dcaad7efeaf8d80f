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
#include <optional>
#include <vector>

#include "bqc/harness/transcript.hpp"
#include "bqc/mbqc/pattern.hpp"
#include "bqc/quantum/random.hpp"
#include "bqc/quantum/state_vector.hpp"

namespace bqc {

enum class StreamingServer : std::uint8_t {
  kHonest,        // brickwork graph state
  kProductState,  // |+> on every vertex, no entangling gates
};

struct MeasuringClientOptions {
  StreamingServer server = StreamingServer::kHonest;
  /// Divert this session into a test of K_v instead of computing.
  std::optional<std::size_t> test_vertex;
  /// Client measurement results in stream order; sampled when unset.
  std::optional<std::vector<Bit>> forced_outcomes;
};

struct MeasuringRun {
  Transcript transcript;
  /// Corrected logical output (computation sessions only).
  std::optional<StateVector> output;
  /// K_v parity (test sessions only); 0 = +1 eigenvalue.
  std::optional<Bit> test_outcome;
  std::vector<Bit> outcomes;  // per vertex
  double branch_probability = 1.0;
};

/// The server prepares the resource and streams it one qubit at a time in
/// column-major order; the client measures each qubit on arrival. After the
/// graph declaration nothing flows from client to server. Only computation
/// patterns (no dummies or traps) are accepted.
MeasuringRun run_client_measuring(const MeasurementPattern& p, Rng& rng, const MeasuringClientOptions& opts = {});

}  // namespace bqc
