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

#include "bqc/ubqc/protocol.hpp"

#include "bqc/errors.hpp"
#include "bqc/harness/channel.hpp"
#include "bqc/ubqc/server.hpp"

namespace bqc {

UbqcRun run_ubqc(const MeasurementPattern& p, Rng& rng, const UbqcOptions& opts) {
  const auto& g = p.graph();
  const auto rows = static_cast<std::uint32_t>(g.rows()), cols = static_cast<std::uint32_t>(g.cols());
  Rng client_rng = rng.fork(1), server_rng = rng.fork(2), adversary_rng = rng.fork(3);

  ClientOptions co;
  co.input = opts.input;
  co.rule = opts.rule;
  co.fixed_keys = opts.fixed_keys;
  ClientState cs = client_init(p, client_rng, co);

  Channel ch(SessionInfo{ProtocolId::kUbqc, rows, cols, rng.seed()});
  ch.send(Party::kClient, Party::kServer, GraphDecl{rows, cols});
  const auto ids = prepare_payloads(cs, ch.world());
  for (std::size_t v = 0; v < ids.size(); ++v)
    ch.send(Party::kClient, Party::kServer,
            QubitPayload{static_cast<std::uint32_t>(v), ch.registry().deposit(ids[v])});

  OutcomeSource src =
      opts.forced_outcomes ? OutcomeSource::forced(*opts.forced_outcomes) : OutcomeSource::sampled(server_rng);
  auto honest = honest_server();
  Adversary& adversary = opts.adversary ? *opts.adversary : *honest;
  UbqcServer server(ch, adversary, src, adversary_rng);
  server.receive_setup();
  server.entangle();

  UbqcRun run;
  run.reported.assign(p.vertex_count(), 0);
  run.deltas.assign(p.vertex_count(), Angle8{});
  for (std::size_t v : p.order()) {
    const Angle8 delta = client_delta(cs, v);
    run.deltas[v] = delta;
    ch.send(Party::kClient, Party::kServer, AngleMsg{static_cast<std::uint32_t>(v), delta});
    server.serve_round();
    Message reply = ch.recv(Party::kClient);
    const auto* o = std::get_if<OutcomeMsg>(&reply);
    if (!o || o->vertex != v) throw ProtocolError("expected the outcome of vertex " + std::to_string(v));
    run.reported[v] = o->b;
    client_decode(cs, v, o->b);
  }

  server.return_last_column();
  std::vector<QubitId> last;
  for (std::size_t r = 0; r < g.rows(); ++r) {
    Message m = ch.recv(Party::kClient);
    const auto* q = std::get_if<QubitPayload>(&m);
    if (!q) throw ProtocolError("expected a returned qubit");
    last.push_back(ch.registry().resolve(q->ref));
  }
  run.output = client_decrypt_outputs(cs, ch.world(), last, client_rng);
  ch.close();

  run.decoded = cs.m;
  run.branch_probability = src.branch_probability();
  run.secrets = client_secrets(cs);
  run.transcript = ch.transcript();
  return run;
}

}  // namespace bqc
