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
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "bqc/mbqc/pattern.hpp"
#include "bqc/quantum/random.hpp"
#include "bqc/ubqc/adversary.hpp"
#include "bqc/ubqc/client.hpp"
#include "bqc/verify/stats.hpp"

namespace bqc {

/// A pattern with isolated trap vertices whose results the client knows in
/// advance. Predictions are on the bit the server reports: a trap measured at
/// delta = -theta returns r XOR (dummy bits of its neighbours).
struct TrappedPattern {
  MeasurementPattern pattern;
  std::vector<std::size_t> traps;
  std::vector<std::size_t> dummies;
  std::map<std::size_t, Bit> predictions;
  /// Trap keys, fixed when the predictions were made.
  std::map<std::size_t, VertexKey> keys;
};

/// Appends `extra_rows` rows of dummies below `base` and turns `n_traps` of
/// them into traps. Trap sets are uniform over the sets of pairwise
/// non-adjacent eligible vertices (outside the last column, every neighbour
/// in the new rows). Dummy bits and trap keys are drawn from rng. Throws
/// InvalidArgument when too few vertices are eligible.
TrappedPattern insert_traps(const MeasurementPattern& base, std::size_t n_traps, Rng& rng,
                            std::size_t extra_rows = 1);

/// Same, with no computation at all: a rows x cols region of traps and
/// dummies.
TrappedPattern trap_region(std::size_t rows, std::size_t cols, std::size_t n_traps, Rng& rng);

struct TrapFailure {
  std::size_t vertex = 0;
  Bit expected = 0;
  Bit observed = 0;
  bool operator==(const TrapFailure&) const = default;
};

struct DetectionEstimate {
  std::size_t trials = 0;
  std::size_t rejections = 0;
  double rate = 0;
  Interval wilson;  // 95%
};

struct VerdictReport {
  bool accepted = true;  // iff failures is empty
  std::size_t traps_checked = 0;
  std::vector<TrapFailure> failures;
  std::optional<DetectionEstimate> estimate;  // aggregated reports only
};

/// Compares every trap's reported bit (indexed by vertex) with its
/// prediction. Throws InvalidArgument when outcomes are missing.
VerdictReport check_traps(const TrappedPattern& tp, std::span<const Bit> reported);

using TrapGenerator = std::function<TrappedPattern(Rng&)>;
using AdversaryFactory = std::function<std::unique_ptr<Adversary>()>;

/// Monte Carlo rejection rate of UBQC sessions on freshly generated trapped
/// patterns against a fresh adversary per trial. Throws when trials == 0.
VerdictReport detection_rate(const TrapGenerator& generate, const AdversaryFactory& adversary, std::size_t trials,
                             Rng& rng);

}  // namespace bqc
