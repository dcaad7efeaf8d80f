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

#include "bqc/ubqc/server.hpp"

#include <string>

#include "bqc/errors.hpp"
#include "bqc/mbqc/graph.hpp"

namespace bqc {

namespace {

template <class T>
T expect(Channel& ch, Party to) {
  Message m = ch.recv(to);
  if (auto* t = std::get_if<T>(&m)) return *t;
  throw ProtocolError("unexpected " + describe(m));
}

}  // namespace

UbqcServer::UbqcServer(Channel& channel, Adversary& adversary, OutcomeSource& outcomes, Rng& adversary_rng)
    : channel_(channel), adversary_(adversary), outcomes_(outcomes), adversary_rng_(adversary_rng) {}

void UbqcServer::receive_declaration() {
  const auto decl = expect<GraphDecl>(channel_, Party::kServer);
  if (decl.rows == 0 || decl.cols == 0) throw ProtocolError("empty graph declared");
  rows_ = decl.rows;
  cols_ = decl.cols;
  held_.assign(rows_ * cols_, std::nullopt);
  measured_.assign(rows_ * cols_, false);
}

void UbqcServer::adopt(std::size_t v, QubitId q) {
  if (v >= held_.size() || held_[v]) throw ProtocolError("duplicate or unknown qubit for vertex " + std::to_string(v));
  held_[v] = q;
}

void UbqcServer::receive_setup() {
  receive_declaration();
  for (std::size_t i = 0; i < held_.size(); ++i) {
    const auto q = expect<QubitPayload>(channel_, Party::kServer);
    adopt(q.vertex, channel_.registry().resolve(q.ref));
  }
}

void UbqcServer::entangle() {
  if (held_.empty()) throw ProtocolError("no graph declared");
  for (std::size_t v = 0; v < held_.size(); ++v)
    if (!held_[v]) throw ProtocolError("missing payload for vertex " + std::to_string(v));
  const BrickworkGraph g(rows_, cols_);
  for (const auto& [a, b] : g.graph().edges()) channel_.world().apply(GateKind::kCZ, *held_[a], *held_[b]);
  entangled_ = true;
  ServerQubits view(channel_.world(), held_);
  adversary_.after_entangle(view, adversary_rng_);
}

void UbqcServer::serve_round() {
  const auto msg = expect<AngleMsg>(channel_, Party::kServer);
  const std::size_t v = msg.vertex;
  if (!entangled_) throw ProtocolError("measurement requested before entangling");
  if (v >= held_.size() || measured_[v] || !held_[v])
    throw ProtocolError("vertex " + std::to_string(v) + " cannot be measured (unknown or already measured)");
  const Angle8 angle = adversary_.measurement_angle(msg.vertex, msg.delta, adversary_rng_);
  const Bit bit = channel_.world().measure_xy(*held_[v], angle, outcomes_).bit;
  held_[v].reset();
  measured_[v] = true;
  channel_.send(Party::kServer, Party::kClient, OutcomeMsg{msg.vertex, adversary_.report(msg.vertex, bit, adversary_rng_)});
}

void UbqcServer::return_last_column() {
  for (std::size_t r = 0; r < rows_; ++r) {
    const std::size_t v = r * cols_ + cols_ - 1;
    if (!held_[v]) throw ProtocolError("last-column vertex " + std::to_string(v) + " not held");
    const std::uint64_t ref = channel_.registry().deposit(*held_[v]);
    held_[v].reset();
    channel_.send(Party::kServer, Party::kClient, QubitPayload{static_cast<std::uint32_t>(v), ref});
  }
}

void UbqcServer::serve_z_readout() {
  const auto msg = expect<MeasureZ>(channel_, Party::kServer);
  const std::size_t v = msg.vertex;
  if (v >= held_.size() || !held_[v]) throw ProtocolError("vertex " + std::to_string(v) + " not held");
  const Bit bit = channel_.world().measure_z(*held_[v], outcomes_).bit;
  held_[v].reset();
  measured_[v] = true;
  channel_.send(Party::kServer, Party::kClient, OutcomeMsg{msg.vertex, adversary_.report(msg.vertex, bit, adversary_rng_)});
}

}  // namespace bqc
