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

#include "bqc/ubqc/two_server.hpp"

#include <string>

#include "bqc/errors.hpp"
#include "bqc/harness/channel.hpp"
#include "bqc/ubqc/rsp.hpp"
#include "bqc/ubqc/server.hpp"

namespace bqc {

namespace {

template <class T>
T expect(Channel& ch, Party to) {
  Message m = ch.recv(to);
  if (auto* t = std::get_if<T>(&m)) return *t;
  throw ProtocolError("unexpected " + describe(m));
}

}  // namespace

TwoServerRun run_two_server(const MeasurementPattern& p, Rng& rng, const TwoServerOptions& opts) {
  if (!p.dummies().empty() || !p.traps().empty())
    throw InvalidArgument("two-server mode supports computation patterns only");
  const auto& g = p.graph();
  const auto rows = static_cast<std::uint32_t>(g.rows()), cols = static_cast<std::uint32_t>(g.cols());
  const std::size_t n = p.vertex_count();
  Rng client_rng = rng.fork(1), server_rng = rng.fork(2), adversary_rng = rng.fork(3);

  ClientOptions co;
  co.rule = opts.rule;
  ClientState cs = client_init(p, client_rng, co);
  std::vector<Angle8> alpha(n);
  for (auto& a : alpha) a = client_rng.angle();

  Channel ch(SessionInfo{ProtocolId::kTwoServer, rows, cols, rng.seed()});
  OutcomeSource src =
      opts.forced_outcomes ? OutcomeSource::forced(*opts.forced_outcomes) : OutcomeSource::sampled(server_rng);
  auto honest = honest_server();
  Adversary& adversary = opts.adversary ? *opts.adversary : *honest;
  UbqcServer server1(ch, adversary, src, adversary_rng);

  ch.send(Party::kClient, Party::kServer, GraphDecl{rows, cols});
  server1.receive_declaration();

  // Trusted setup hands out one pair per vertex just before it is used.
  for (std::size_t v = 0; v < n; ++v) {
    const auto pair = ch.world().add_block(bell_state(kRspPair));
    server1.adopt(v, pair[1]);
    const auto vid = static_cast<std::uint32_t>(v);
    ch.send(Party::kClient, Party::kServer2, AngleMsg{vid, alpha[v]});
    const auto req = expect<AngleMsg>(ch, Party::kServer2);
    const Bit s = ch.world().measure_xy(pair[0], req.delta, src).bit;
    ch.send(Party::kServer2, Party::kClient, OutcomeMsg{req.vertex, s});
    const auto rep = expect<OutcomeMsg>(ch, Party::kClient);
    cs.r[v] = rep.b;
    cs.theta[v] = -alpha[v];
  }

  server1.entangle();
  for (std::size_t v : p.order()) {
    ch.send(Party::kClient, Party::kServer, AngleMsg{static_cast<std::uint32_t>(v), client_delta(cs, v)});
    server1.serve_round();
    const auto o = expect<OutcomeMsg>(ch, Party::kClient);
    if (o.vertex != v) throw ProtocolError("expected the outcome of vertex " + std::to_string(v));
    client_decode(cs, v, o.b);
  }

  TwoServerRun run;
  for (std::size_t v : p.outputs()) {
    ch.send(Party::kClient, Party::kServer, MeasureZ{static_cast<std::uint32_t>(v)});
    server1.serve_z_readout();
    const auto o = expect<OutcomeMsg>(ch, Party::kClient);
    // Z^r, Rz(theta) and the Z part of the frame leave a Z readout unchanged.
    run.output_bits.push_back(o.b ^ p.parities(v, cs.m, cs.frame).x);
  }
  ch.close();

  run.decoded = cs.m;
  run.branch_probability = src.branch_probability();
  run.secrets = client_secrets(cs);
  run.transcript = ch.transcript();
  return run;
}

}  // namespace bqc
