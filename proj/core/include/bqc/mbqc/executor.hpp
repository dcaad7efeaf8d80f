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

#include "bqc/mbqc/pattern.hpp"
#include "bqc/quantum/measure.hpp"
#include "bqc/quantum/random.hpp"
#include "bqc/quantum/state_vector.hpp"

namespace bqc {

enum class ExecutionMode : std::uint8_t {
  kMonolithic,  // whole graph state at once
  kStreaming,   // only the active column plus one qubit (rows + 1 qubits)
};

struct RunOptions {
  ExecutionMode mode = ExecutionMode::kMonolithic;
  /// Logical input on the computation rows (top row = qubit 0); |+>^w if unset.
  std::optional<StateVector> input;
};

struct PatternRun {
  /// Outcome per vertex (0 for unmeasured vertices), as returned by the
  /// measurement (no decoding needed: there is no one-time pad here).
  std::vector<Bit> outcomes;
  /// Corrected logical output, output row order.
  StateVector output{1};
  std::size_t peak_qubits = 0;
};

/// Executes the pattern: prepares |+> (|d> for dummies, the input block on
/// the first column of the computation rows), entangles along the graph and
/// measures in order. Compute vertices use adapt_angle(phi, sX, sZ); traps
/// and dummies are measured at angle 0. Outcomes are drawn from `src` in
/// measurement order.
PatternRun run_pattern(const MeasurementPattern& p, OutcomeSource& src, const RunOptions& opts = {});
PatternRun run_pattern(const MeasurementPattern& p, Rng& rng, const RunOptions& opts = {});

}  // namespace bqc
