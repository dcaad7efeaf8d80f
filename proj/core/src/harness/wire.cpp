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

#include "bqc/harness/wire.hpp"

#include <string>

#include "bqc/errors.hpp"

namespace bqc {

void ByteWriter::u32(std::uint32_t v) {
  for (int i = 0; i < 4; ++i) out_.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

void ByteWriter::u64(std::uint64_t v) {
  for (int i = 0; i < 8; ++i) out_.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

void ByteReader::need(std::size_t n) const {
  if (remaining() < n) throw InvalidArgument("truncated record");
}

std::uint8_t ByteReader::u8() {
  need(1);
  return in_[pos_++];
}

std::uint32_t ByteReader::u32() {
  need(4);
  std::uint32_t v = 0;
  for (int i = 0; i < 4; ++i) v |= std::uint32_t{in_[pos_++]} << (8 * i);
  return v;
}

std::uint64_t ByteReader::u64() {
  need(8);
  std::uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v |= std::uint64_t{in_[pos_++]} << (8 * i);
  return v;
}

std::span<const std::uint8_t> ByteReader::raw(std::size_t n) {
  need(n);
  auto s = in_.subspan(pos_, n);
  pos_ += n;
  return s;
}

Bytes encode_body(const Message& m) {
  ByteWriter w;
  if (auto* q = std::get_if<QubitPayload>(&m)) {
    w.u32(q->vertex);
    w.u64(q->ref);
  } else if (auto* a = std::get_if<AngleMsg>(&m)) {
    w.u32(a->vertex);
    w.u8(static_cast<std::uint8_t>(a->delta.k()));
  } else if (auto* o = std::get_if<OutcomeMsg>(&m)) {
    w.u32(o->vertex);
    w.u8(o->b);
  } else if (auto* z = std::get_if<MeasureZ>(&m)) {
    w.u32(z->vertex);
  } else if (auto* g = std::get_if<GraphDecl>(&m)) {
    w.u32(g->rows);
    w.u32(g->cols);
  } else if (auto* r = std::get_if<GateRequest>(&m)) {
    w.u8(static_cast<std::uint8_t>(r->gate));
  } else if (auto* d = std::get_if<DebugSecret>(&m)) {
    w.raw(d->bytes);
  }
  return w.take();
}

Message decode_body(MessageKind kind, std::span<const std::uint8_t> body) {
  ByteReader r(body);
  Message m;
  switch (kind) {
    case MessageKind::kQubitPayload: {
      QubitPayload q;
      q.vertex = r.u32();
      q.ref = r.u64();
      m = q;
      break;
    }
    case MessageKind::kAngle: {
      AngleMsg a;
      a.vertex = r.u32();
      const std::uint8_t k = r.u8();
      if (k > 7) throw InvalidArgument("angle byte out of range");
      a.delta = Angle8(k);
      m = a;
      break;
    }
    case MessageKind::kOutcome: {
      OutcomeMsg o;
      o.vertex = r.u32();
      o.b = r.u8();
      if (o.b > 1) throw InvalidArgument("outcome byte out of range");
      m = o;
      break;
    }
    case MessageKind::kMeasureZ:
      m = MeasureZ{r.u32()};
      break;
    case MessageKind::kGraphDecl: {
      GraphDecl g;
      g.rows = r.u32();
      g.cols = r.u32();
      m = g;
      break;
    }
    case MessageKind::kGateRequest: {
      const std::uint8_t g = r.u8();
      if (g > static_cast<std::uint8_t>(GateKind::kCNOT)) throw InvalidArgument("gate byte out of range");
      m = GateRequest{static_cast<GateKind>(g)};
      break;
    }
    case MessageKind::kDebugSecret: {
      auto b = r.raw(r.remaining());
      m = DebugSecret{Bytes(b.begin(), b.end())};
      break;
    }
    default:
      throw InvalidArgument("unknown message kind " + std::to_string(static_cast<int>(kind)));
  }
  if (r.remaining() != 0) throw InvalidArgument("trailing bytes in message body");
  return m;
}

std::uint8_t direction_byte(Party from, Party to) {
  return static_cast<std::uint8_t>(static_cast<std::uint8_t>(from) << 4 | static_cast<std::uint8_t>(to));
}

std::pair<Party, Party> parse_direction(std::uint8_t b) {
  const std::uint8_t from = b >> 4, to = b & 0x0f;
  if (from > 2 || to > 2) throw InvalidArgument("bad direction byte");
  return {static_cast<Party>(from), static_cast<Party>(to)};
}

void write_record(ByteWriter& w, std::uint64_t seq, Party from, Party to, const Message& m) {
  const Bytes body = encode_body(m);
  w.u32(static_cast<std::uint32_t>(8 + 1 + 1 + body.size()));
  w.u64(seq);
  w.u8(direction_byte(from, to));
  w.u8(static_cast<std::uint8_t>(kind_of(m)));
  w.raw(body);
}

Record read_record(ByteReader& r) {
  const std::uint32_t len = r.u32();
  if (len < 10) throw InvalidArgument("record too short");
  ByteReader rec(r.raw(len));
  Record out;
  out.seq = rec.u64();
  std::tie(out.from, out.to) = parse_direction(rec.u8());
  const auto kind = static_cast<MessageKind>(rec.u8());
  out.message = decode_body(kind, rec.raw(rec.remaining()));
  return out;
}

}  // namespace bqc
