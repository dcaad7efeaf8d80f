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

#include "bqc/harness/message.hpp"

#include <sstream>

namespace bqc {

std::string_view party_name(Party p) {
  switch (p) {
    case Party::kClient: return "client";
    case Party::kServer: return "server";
    case Party::kServer2: return "server2";
  }
  return "?";
}

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

}  // namespace

MessageKind kind_of(const Message& m) {
  return std::visit(Overloaded{
                        [](const QubitPayload&) { return MessageKind::kQubitPayload; },
                        [](const AngleMsg&) { return MessageKind::kAngle; },
                        [](const OutcomeMsg&) { return MessageKind::kOutcome; },
                        [](const MeasureZ&) { return MessageKind::kMeasureZ; },
                        [](const GraphDecl&) { return MessageKind::kGraphDecl; },
                        [](const GateRequest&) { return MessageKind::kGateRequest; },
                        [](const DebugSecret&) { return MessageKind::kDebugSecret; },
                    },
                    m);
}

std::string_view kind_name(MessageKind k) {
  switch (k) {
    case MessageKind::kQubitPayload: return "qubit";
    case MessageKind::kAngle: return "angle";
    case MessageKind::kOutcome: return "outcome";
    case MessageKind::kMeasureZ: return "measure-z";
    case MessageKind::kGraphDecl: return "graph";
    case MessageKind::kGateRequest: return "gate";
    case MessageKind::kDebugSecret: return "debug-secret";
  }
  return "?";
}

std::string describe(const Message& m) {
  std::ostringstream os;
  std::visit(Overloaded{
                 [&](const QubitPayload& q) { os << "qubit v=" << q.vertex << " ref=" << q.ref; },
                 [&](const AngleMsg& a) { os << "angle v=" << a.vertex << " delta=" << a.delta.k(); },
                 [&](const OutcomeMsg& o) { os << "outcome v=" << o.vertex << " b=" << int(o.b); },
                 [&](const MeasureZ& z) { os << "measure-z v=" << z.vertex; },
                 [&](const GraphDecl& g) { os << "graph " << g.rows << "x" << g.cols; },
                 [&](const GateRequest& g) { os << "gate " << gate_name(g.gate); },
                 [&](const DebugSecret& d) { os << "debug-secret " << d.bytes.size() << " bytes"; },
             },
             m);
  return os.str();
}

}  // namespace bqc
