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

#include <filesystem>
#include <string>

#include "bqc/harness/json_io.hpp"

namespace bqc {

struct ExperimentResult {
  std::string report;  // bqc-report/1 JSON
  /// False when a verification check rejected or a transcript leaked a secret.
  bool accepted = true;
};

/// Runs cfg.trials sessions of the configured protocol (session s draws from
/// Rng(cfg.seed).fork(s)) plus the optional audit. Relative source paths are
/// resolved against base_dir. The report is a pure function of (cfg, files).
ExperimentResult run_experiment(const ExperimentConfig& cfg, const std::filesystem::path& base_dir = ".");

}  // namespace bqc
