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
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "bqc/harness/transcript.hpp"
#include "bqc/mbqc/circuit.hpp"
#include "bqc/mbqc/pattern.hpp"
#include "bqc/verify/traps.hpp"

namespace bqc {

// JSON documents carry a "format" tag; readers reject unknown keys and throw
// ConfigError naming the offending field.
inline constexpr std::string_view kPatternFormat = "bqc-pattern/1";
inline constexpr std::string_view kCircuitFormat = "bqc-circuit/1";
inline constexpr std::string_view kConfigFormat = "bqc-config/1";
inline constexpr std::string_view kReportFormat = "bqc-report/1";

/// {"format", "rows", "cols", "vertices": [row-major {"role", "angle" | "bit"}]}.
std::string pattern_to_json(const MeasurementPattern& p);
MeasurementPattern pattern_from_json(std::string_view text);

/// {"format", "wires", "gates": [{"gate", "targets", "angle"?}]}.
std::string circuit_to_json(const Circuit& c);
Circuit circuit_from_json(std::string_view text);

enum class AuditMode : std::uint8_t { kNone, kExact, kSampled };
std::string_view audit_mode_name(AuditMode m);

struct ExperimentConfig {
  ProtocolId protocol = ProtocolId::kUbqc;
  /// Exactly one source. Pattern sources suit the MBQC protocols; the
  /// encrypted-compute protocols need a circuit.
  std::optional<std::string> pattern;
  std::optional<std::string> circuit;
  std::uint64_t seed = 0;
  std::size_t trials = 1;
  std::string adversary = "honest";
  std::size_t traps = 0;          // ubqc only
  double test_fraction = 0.0;     // client-measuring only
  AuditMode audit = AuditMode::kNone;
  std::optional<std::string> audit_against;  // pattern path
  bool transcripts = false;       // embed the first session's transcript (hex)
  bool operator==(const ExperimentConfig&) const = default;
};

/// Validates every field (types, ranges, cross-field rules).
ExperimentConfig config_from_json(std::string_view text);
std::string config_to_json(const ExperimentConfig& c);

std::string verdict_to_json(const VerdictReport& v);

std::string to_hex(std::span<const std::uint8_t> bytes);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace bqc
