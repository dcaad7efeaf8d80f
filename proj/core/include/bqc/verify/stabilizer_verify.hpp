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
#include <optional>

#include "bqc/mbqc/pattern.hpp"
#include "bqc/quantum/random.hpp"
#include "bqc/ubqc/measuring_client.hpp"
#include "bqc/verify/traps.hpp"

namespace bqc {

/// Runs `sessions` measuring-client sessions. Each one independently becomes
/// a test of K_v with probability test_fraction (v uniform over the graph, or
/// `vertex` when given); the rest compute. A test with parity 1 is recorded as
/// a failure on v. The estimate covers test sessions only and is absent when
/// there were none.
VerdictReport stabilizer_verify(const MeasurementPattern& p, double test_fraction, std::size_t sessions,
                                StreamingServer server, Rng& rng, std::optional<std::size_t> vertex = std::nullopt);

}  // namespace bqc
