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
#include <string>

#include "bqc/quantum/random.hpp"

namespace bqc::tools {

struct KeycheckResult {
  std::size_t table_entries = 0;
  std::size_t table_mismatches = 0;
  std::size_t circuits = 0;
  std::size_t circuit_mismatches = 0;
  std::string report;  // JSON
  bool ok() const { return table_mismatches == 0 && circuit_mismatches == 0; }
};

/// Checks the symplectic key rules against dense conjugation: the full
/// generator x Pauli table, then `trials` random 3-qubit Clifford circuits.
KeycheckResult keycheck(std::size_t trials, Rng& rng);

}  // namespace bqc::tools
