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
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "bqc/quantum/angle.hpp"
#include "bqc/quantum/gates.hpp"

namespace bqc {

enum class Party : std::uint8_t { kClient = 0, kServer = 1, kServer2 = 2 };

std::string_view party_name(Party p);

/// Quantum state in flight; `ref` is an opaque registry reference.
struct QubitPayload {
  std::uint32_t vertex = 0;
  std::uint64_t ref = 0;
  bool operator==(const QubitPayload&) const = default;
};

struct AngleMsg {
  std::uint32_t vertex = 0;
  Angle8 delta{};
  bool operator==(const AngleMsg&) const = default;
};

struct OutcomeMsg {
  std::uint32_t vertex = 0;
  Bit b = 0;
  bool operator==(const OutcomeMsg&) const = default;
};

/// Computational-basis measurement request (classical-client output readout).
struct MeasureZ {
  std::uint32_t vertex = 0;
  bool operator==(const MeasureZ&) const = default;
};

struct GraphDecl {
  std::uint32_t rows = 0;
  std::uint32_t cols = 0;
  bool operator==(const GraphDecl&) const = default;
};

/// Encrypted-compute request. Only the gate name and arity travel; the client
/// holds every qubit and payload references are fresh per round.
struct GateRequest {
  GateKind gate = GateKind::kH;
  bool operator==(const GateRequest&) const = default;
};

/// Test fixture for leak detection: carries raw bytes. Never sent by any
/// protocol implementation.
struct DebugSecret {
  std::vector<std::uint8_t> bytes;
  bool operator==(const DebugSecret&) const = default;
};

using Message = std::variant<QubitPayload, AngleMsg, OutcomeMsg, MeasureZ, GraphDecl, GateRequest, DebugSecret>;

enum class MessageKind : std::uint8_t {
  kQubitPayload = 1,
  kAngle = 2,
  kOutcome = 3,
  kMeasureZ = 4,
  kGraphDecl = 5,
  kGateRequest = 6,
  kDebugSecret = 0x7f,
};

MessageKind kind_of(const Message& m);
std::string_view kind_name(MessageKind k);
std::string describe(const Message& m);

}  // namespace bqc
