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
#include <deque>
#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "bqc/harness/message.hpp"
#include "bqc/harness/transcript.hpp"
#include "bqc/quantum/qubit_register.hpp"

namespace bqc {

/// Opaque references for quantum states in flight. States live in one shared
/// simulation register (the "world"); a reference names a qubit and must be
/// resolved exactly once.
class QuantumRegistry {
 public:
  std::uint64_t deposit(QubitId q);
  /// Throws ProtocolError on unknown or already-resolved references.
  QubitId resolve(std::uint64_t ref);
  std::size_t unresolved() const { return pending_.size(); }

 private:
  std::map<std::uint64_t, QubitId> pending_;
  std::uint64_t next_ = 1;
};

/// Per-protocol ordering rules checked on every send.
class OrderingRules {
 public:
  virtual ~OrderingRules() = default;
  /// Throws ProtocolError on a violation.
  virtual void on_send(Party from, Party to, const Message& m) = 0;
  virtual bool complete() const = 0;
};

std::unique_ptr<OrderingRules> make_rules(const SessionInfo& info);

/// Simulated session channel: enforces topology (servers never talk to each
/// other) and ordering, records the transcript, and queues the encoded bytes
/// per receiver.
class Channel {
 public:
  explicit Channel(SessionInfo info);

  void send(Party from, Party to, const Message& m);
  /// Next queued message for `to`; throws ProtocolError when none is pending.
  Message recv(Party to);
  bool has_pending(Party to) const;

  QuantumRegistry& registry() { return registry_; }
  QubitRegister& world() { return world_; }
  const QubitRegister& world() const { return world_; }
  const Transcript& transcript() const { return transcript_; }

  /// Ends the session: every reference resolved, every queue drained and the
  /// ordering rules complete. Throws ProtocolError otherwise.
  void close();

 private:
  Transcript transcript_;
  std::unique_ptr<OrderingRules> rules_;
  QuantumRegistry registry_;
  QubitRegister world_;
  std::map<Party, std::deque<std::pair<MessageKind, Bytes>>> queues_;
};

}  // namespace bqc
