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

#include "bqc/harness/channel.hpp"

#include <string>

#include "bqc/errors.hpp"
#include "bqc/mbqc/flow.hpp"
#include "bqc/mbqc/graph.hpp"

namespace bqc {

std::uint64_t QuantumRegistry::deposit(QubitId q) {
  const std::uint64_t ref = next_++;
  pending_.emplace(ref, q);
  return ref;
}

QubitId QuantumRegistry::resolve(std::uint64_t ref) {
  auto it = pending_.find(ref);
  if (it == pending_.end())
    throw ProtocolError("quantum reference " + std::to_string(ref) + " unknown or already resolved");
  QubitId q = it->second;
  pending_.erase(it);
  return q;
}

namespace {

[[noreturn]] void violation(const std::string& what, Party from, Party to, const Message& m) {
  throw ProtocolError("ordering violation (" + what + "): " + std::string(party_name(from)) + "->" +
                      std::string(party_name(to)) + " " + describe(m));
}

template <class T>
const T* as(const Message& m) {
  return std::get_if<T>(&m);
}

// Expectation cursor shared by the graph-based protocols.
struct Step {
  Party from;
  Party to;
  MessageKind kind;
  std::uint32_t vertex;
};

class ScriptRules : public OrderingRules {
 public:
  void on_send(Party from, Party to, const Message& m) override {
    if (pos_ >= script_.size()) violation("session already complete", from, to, m);
    const Step& s = script_[pos_];
    if (s.from != from || s.to != to || s.kind != kind_of(m)) violation("unexpected message", from, to, m);
    std::uint32_t vertex = s.vertex;
    bool ok = true;
    if (auto* q = as<QubitPayload>(m)) ok = q->vertex == vertex;
    if (auto* a = as<AngleMsg>(m)) ok = a->vertex == vertex;
    if (auto* o = as<OutcomeMsg>(m)) ok = o->vertex == vertex;
    if (auto* z = as<MeasureZ>(m)) ok = z->vertex == vertex;
    if (auto* g = as<GraphDecl>(m)) ok = g->rows == rows_ && g->cols == cols_;
    if (!ok) violation("expected vertex " + std::to_string(vertex), from, to, m);
    ++pos_;
  }
  bool complete() const override { return pos_ == script_.size(); }

 protected:
  ScriptRules(std::uint32_t rows, std::uint32_t cols) : rows_(rows), cols_(cols) {
    if (rows == 0 || cols == 0) throw InvalidArgument("session dimensions must be positive");
  }
  void push(Party from, Party to, MessageKind kind, std::uint32_t vertex = 0) {
    script_.push_back({from, to, kind, vertex});
  }
  std::vector<std::size_t> order() const { return brickwork_order(BrickworkGraph(rows_, cols_)); }
  std::uint32_t id(std::uint32_t r, std::uint32_t c) const { return r * cols_ + c; }

  std::uint32_t rows_;
  std::uint32_t cols_;

 private:
  std::vector<Step> script_;
  std::size_t pos_ = 0;
};

constexpr Party C = Party::kClient;
constexpr Party S = Party::kServer;
constexpr Party S2 = Party::kServer2;

// Graph declaration, all N*M payloads, alternating angle/outcome rounds in
// measurement order, then the last column returned.
class UbqcRules : public ScriptRules {
 public:
  UbqcRules(std::uint32_t rows, std::uint32_t cols) : ScriptRules(rows, cols) {
    push(C, S, MessageKind::kGraphDecl);
    for (std::uint32_t v = 0; v < rows * cols; ++v) push(C, S, MessageKind::kQubitPayload, v);
    for (std::size_t v : order()) {
      push(C, S, MessageKind::kAngle, static_cast<std::uint32_t>(v));
      push(S, C, MessageKind::kOutcome, static_cast<std::uint32_t>(v));
    }
    for (std::uint32_t r = 0; r < rows; ++r) push(S, C, MessageKind::kQubitPayload, id(r, cols - 1));
  }
};

// Graph declaration, then the server streams every qubit column by column.
class ClientMeasuringRules : public ScriptRules {
 public:
  ClientMeasuringRules(std::uint32_t rows, std::uint32_t cols) : ScriptRules(rows, cols) {
    push(C, S, MessageKind::kGraphDecl);
    for (std::uint32_t c = 0; c < cols; ++c)
      for (std::uint32_t r = 0; r < rows; ++r) push(S, C, MessageKind::kQubitPayload, id(r, c));
  }
};

// Remote preparation through server 2, then UBQC rounds with server 1 and a
// computational-basis readout of the last column.
class TwoServerRules : public ScriptRules {
 public:
  TwoServerRules(std::uint32_t rows, std::uint32_t cols) : ScriptRules(rows, cols) {
    push(C, S, MessageKind::kGraphDecl);
    for (std::uint32_t v = 0; v < rows * cols; ++v) {
      push(C, S2, MessageKind::kAngle, v);
      push(S2, C, MessageKind::kOutcome, v);
    }
    for (std::size_t v : order()) {
      push(C, S, MessageKind::kAngle, static_cast<std::uint32_t>(v));
      push(S, C, MessageKind::kOutcome, static_cast<std::uint32_t>(v));
    }
    for (std::uint32_t r = 0; r < rows; ++r) {
      push(C, S, MessageKind::kMeasureZ, id(r, cols - 1));
      push(S, C, MessageKind::kOutcome, id(r, cols - 1));
    }
  }
};

// Rounds of: payloads (one per gate target), the gate request, payloads back.
class ChildsRules : public OrderingRules {
 public:
  void on_send(Party from, Party to, const Message& m) override {
    if (auto* q = as<QubitPayload>(m)) {
      if (from == C && to == S && stage_ == Stage::kSending) {
        if (q->vertex != sent_) violation("payload index", from, to, m);
        ++sent_;
        return;
      }
      if (from == S && to == C && stage_ == Stage::kReturning) {
        if (q->vertex != returned_) violation("payload index", from, to, m);
        if (++returned_ == sent_) {
          stage_ = Stage::kSending;
          sent_ = returned_ = 0;
        }
        return;
      }
    }
    if (auto* g = as<GateRequest>(m); g && from == C && to == S && stage_ == Stage::kSending) {
      if (sent_ != gate_arity(g->gate)) violation("payload count does not match gate arity", from, to, m);
      stage_ = Stage::kReturning;
      return;
    }
    violation("unexpected message", from, to, m);
  }
  bool complete() const override { return stage_ == Stage::kSending && sent_ == 0; }

 private:
  enum class Stage { kSending, kReturning };
  Stage stage_ = Stage::kSending;
  std::uint32_t sent_ = 0;
  std::uint32_t returned_ = 0;
};

}  // namespace

std::unique_ptr<OrderingRules> make_rules(const SessionInfo& info) {
  switch (info.protocol) {
    case ProtocolId::kUbqc: return std::make_unique<UbqcRules>(info.rows, info.cols);
    case ProtocolId::kClientMeasuring: return std::make_unique<ClientMeasuringRules>(info.rows, info.cols);
    case ProtocolId::kTwoServer: return std::make_unique<TwoServerRules>(info.rows, info.cols);
    case ProtocolId::kChilds:
    case ProtocolId::kChildsHidden: return std::make_unique<ChildsRules>();
  }
  throw InvalidArgument("unknown protocol");
}

Channel::Channel(SessionInfo info) : transcript_(info), rules_(make_rules(info)) {}

void Channel::send(Party from, Party to, const Message& m) {
  if (from == to) throw ProtocolError("party cannot send to itself");
  if (from != Party::kClient && to != Party::kClient)
    throw ProtocolError("servers are not connected: " + std::string(party_name(from)) + "->" +
                        std::string(party_name(to)) + " rejected");
  if (to == Party::kServer2 && transcript_.info().protocol != ProtocolId::kTwoServer)
    throw ProtocolError("no second server in this session");
  rules_->on_send(from, to, m);
  transcript_.append(from, to, m);
  queues_[to].emplace_back(kind_of(m), encode_body(m));
}

Message Channel::recv(Party to) {
  auto& q = queues_[to];
  if (q.empty()) throw ProtocolError("nothing pending for " + std::string(party_name(to)));
  auto [kind, bytes] = std::move(q.front());
  q.pop_front();
  return decode_body(kind, bytes);
}

bool Channel::has_pending(Party to) const {
  auto it = queues_.find(to);
  return it != queues_.end() && !it->second.empty();
}

void Channel::close() {
  if (registry_.unresolved() > 0)
    throw ProtocolError(std::to_string(registry_.unresolved()) + " quantum payload(s) never received");
  for (const auto& [party, q] : queues_)
    if (!q.empty()) throw ProtocolError("undelivered messages for " + std::string(party_name(party)));
  if (!rules_->complete()) throw ProtocolError("session ended before the protocol completed");
}

}  // namespace bqc
