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
#include <span>
#include <vector>

#include "bqc/harness/message.hpp"

namespace bqc {

using Bytes = std::vector<std::uint8_t>;

/// Little-endian fixed-width writer.
class ByteWriter {
 public:
  void u8(std::uint8_t v) { out_.push_back(v); }
  void u32(std::uint32_t v);
  void u64(std::uint64_t v);
  void raw(std::span<const std::uint8_t> b) { out_.insert(out_.end(), b.begin(), b.end()); }
  Bytes take() { return std::move(out_); }
  const Bytes& bytes() const { return out_; }

 private:
  Bytes out_;
};

/// Reader over a byte span; throws InvalidArgument on truncation.
class ByteReader {
 public:
  explicit ByteReader(std::span<const std::uint8_t> in) : in_(in) {}
  std::uint8_t u8();
  std::uint32_t u32();
  std::uint64_t u64();
  std::span<const std::uint8_t> raw(std::size_t n);
  std::size_t remaining() const { return in_.size() - pos_; }

 private:
  void need(std::size_t n) const;
  std::span<const std::uint8_t> in_;
  std::size_t pos_ = 0;
};

/// Message body without the kind byte.
Bytes encode_body(const Message& m);
Message decode_body(MessageKind kind, std::span<const std::uint8_t> body);

/// Direction byte: from << 4 | to.
std::uint8_t direction_byte(Party from, Party to);
std::pair<Party, Party> parse_direction(std::uint8_t b);

/// One record: u32 length of the rest | u64 seq | direction | kind | body.
void write_record(ByteWriter& w, std::uint64_t seq, Party from, Party to, const Message& m);

struct Record {
  std::uint64_t seq = 0;
  Party from = Party::kClient;
  Party to = Party::kServer;
  Message message;
};
Record read_record(ByteReader& r);

}  // namespace bqc
