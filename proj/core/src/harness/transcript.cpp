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

#include "bqc/harness/transcript.hpp"

#include <algorithm>
#include <string>

#include "bqc/errors.hpp"

namespace bqc {

std::string_view protocol_name(ProtocolId p) {
  switch (p) {
    case ProtocolId::kUbqc: return "ubqc";
    case ProtocolId::kClientMeasuring: return "client-measuring";
    case ProtocolId::kTwoServer: return "two-server";
    case ProtocolId::kChilds: return "childs";
    case ProtocolId::kChildsHidden: return "childs-hidden";
  }
  return "?";
}

ProtocolId parse_protocol(std::string_view name) {
  for (ProtocolId p : {ProtocolId::kUbqc, ProtocolId::kClientMeasuring, ProtocolId::kTwoServer, ProtocolId::kChilds,
                       ProtocolId::kChildsHidden})
    if (protocol_name(p) == name) return p;
  throw InvalidArgument("unknown protocol: " + std::string(name));
}

const TranscriptEntry& Transcript::append(Party from, Party to, Message m) {
  const std::uint64_t seq = entries_.empty() ? 1 : entries_.back().seq + 1;
  entries_.push_back({seq, from, to, std::move(m)});
  return entries_.back();
}

Bytes Transcript::serialize() const {
  ByteWriter w;
  for (char c : std::string_view("BQCT")) w.u8(static_cast<std::uint8_t>(c));
  w.u8(kVersion);
  w.u8(static_cast<std::uint8_t>(info_.protocol));
  w.u32(info_.rows);
  w.u32(info_.cols);
  w.u64(info_.seed);
  for (const auto& e : entries_) write_record(w, e.seq, e.from, e.to, e.message);
  return w.take();
}

Transcript Transcript::parse(std::span<const std::uint8_t> bytes) {
  ByteReader r(bytes);
  auto magic = r.raw(4);
  if (!std::equal(magic.begin(), magic.end(), "BQCT")) throw InvalidArgument("not a transcript (bad magic)");
  if (r.u8() != kVersion) throw InvalidArgument("unsupported transcript version");
  SessionInfo info;
  const std::uint8_t proto = r.u8();
  if (proto < 1 || proto > 5) throw InvalidArgument("unknown protocol id in transcript");
  info.protocol = static_cast<ProtocolId>(proto);
  info.rows = r.u32();
  info.cols = r.u32();
  info.seed = r.u64();
  Transcript t(info);
  std::uint64_t last = 0;
  while (r.remaining() > 0) {
    Record rec = read_record(r);
    if (rec.seq <= last) throw InvalidArgument("transcript sequence numbers must increase");
    last = rec.seq;
    t.entries_.push_back({rec.seq, rec.from, rec.to, std::move(rec.message)});
  }
  return t;
}

std::size_t Transcript::count(Party from, Party to) const {
  return static_cast<std::size_t>(
      std::count_if(entries_.begin(), entries_.end(), [&](const auto& e) { return e.from == from && e.to == to; }));
}

std::size_t Transcript::count(MessageKind kind) const {
  return static_cast<std::size_t>(
      std::count_if(entries_.begin(), entries_.end(), [&](const auto& e) { return kind_of(e.message) == kind; }));
}

Bytes secret_token(std::string_view tag, std::uint32_t index, std::uint8_t value) {
  ByteWriter w;
  for (char c : tag) w.u8(static_cast<std::uint8_t>(c));
  w.u32(index);
  w.u8(value);
  return w.take();
}

bool transcript_scan(const Transcript& t, const SecretSet& secrets) {
  if (t.count(MessageKind::kDebugSecret) > 0) return false;
  const Bytes bytes = t.serialize();
  for (const auto& tok : secrets.tokens) {
    if (tok.empty()) continue;
    if (std::search(bytes.begin(), bytes.end(), tok.begin(), tok.end()) != bytes.end()) return false;
  }
  return true;
}

}  // namespace bqc
