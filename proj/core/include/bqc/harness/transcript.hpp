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
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bqc/harness/message.hpp"
#include "bqc/harness/wire.hpp"

namespace bqc {

enum class ProtocolId : std::uint8_t {
  kUbqc = 1,
  kClientMeasuring = 2,
  kTwoServer = 3,
  kChilds = 4,
  kChildsHidden = 5,
};

std::string_view protocol_name(ProtocolId p);
ProtocolId parse_protocol(std::string_view name);

/// Public session metadata. rows/cols are the declared dimensions (for
/// encrypted compute: register size and request count).
struct SessionInfo {
  ProtocolId protocol = ProtocolId::kUbqc;
  std::uint32_t rows = 0;
  std::uint32_t cols = 0;
  std::uint64_t seed = 0;
  bool operator==(const SessionInfo&) const = default;
};

struct TranscriptEntry {
  std::uint64_t seq = 0;
  Party from = Party::kClient;
  Party to = Party::kServer;
  Message message;
  bool operator==(const TranscriptEntry&) const = default;
};

class Transcript {
 public:
  static constexpr std::uint8_t kVersion = 1;

  Transcript() = default;
  explicit Transcript(SessionInfo info) : info_(info) {}

  const SessionInfo& info() const { return info_; }
  const std::vector<TranscriptEntry>& entries() const { return entries_; }

  /// Appends with seq = previous + 1 (starting at 1).
  const TranscriptEntry& append(Party from, Party to, Message m);

  /// "BQCT" | version | protocol | u32 rows | u32 cols | u64 seed | records.
  Bytes serialize() const;
  static Transcript parse(std::span<const std::uint8_t> bytes);

  std::size_t count(Party from, Party to) const;
  std::size_t count(MessageKind kind) const;

  bool operator==(const Transcript&) const = default;

 private:
  SessionInfo info_;
  std::vector<TranscriptEntry> entries_;
};

/// Tagged byte token used to serialize a secret for leak scanning:
/// tag bytes | u32 index | u8 value.
Bytes secret_token(std::string_view tag, std::uint32_t index, std::uint8_t value);

struct SecretSet {
  std::vector<Bytes> tokens;
  void add(std::string_view tag, std::uint32_t index, std::uint8_t value) {
    tokens.push_back(secret_token(tag, index, value));
  }
};

/// True iff no secret token occurs in the serialized transcript and no
/// debug-secret record is present.
bool transcript_scan(const Transcript& t, const SecretSet& secrets);

}  // namespace bqc
