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

#include "bqc/ubqc/measuring_client.hpp"

#include <algorithm>
#include <string>

#include "bqc/errors.hpp"
#include "bqc/harness/channel.hpp"
#include "bqc/mbqc/flow.hpp"

namespace bqc {

MeasuringRun run_client_measuring(const MeasurementPattern& p, Rng& rng, const MeasuringClientOptions& opts) {
  if (!p.dummies().empty() || !p.traps().empty())
    throw InvalidArgument("the measuring-client protocol takes computation patterns only");
  const auto& g = p.graph();
  const auto rows = static_cast<std::uint32_t>(g.rows()), cols = static_cast<std::uint32_t>(g.cols());
  const std::size_t n = p.vertex_count();
  if (opts.test_vertex && *opts.test_vertex >= n)
    throw InvalidArgument("test vertex " + std::to_string(*opts.test_vertex) + " out of range");
  Rng client_rng = rng.fork(1);

  Channel ch(SessionInfo{ProtocolId::kClientMeasuring, rows, cols, rng.seed()});
  ch.send(Party::kClient, Party::kServer, GraphDecl{rows, cols});

  // Server side: the whole resource is prepared up front, then streamed.
  const Message decl = ch.recv(Party::kServer);
  if (!std::holds_alternative<GraphDecl>(decl)) throw ProtocolError("expected a graph declaration");
  const auto resource = ch.world().add_block(opts.server == StreamingServer::kHonest ? graph_state(g.graph())
                                                                                     : StateVector::plus(n));

  OutcomeSource src =
      opts.forced_outcomes ? OutcomeSource::forced(*opts.forced_outcomes) : OutcomeSource::sampled(client_rng);
  const StaticFrame frame = p.static_frame();
  MeasuringRun run;
  run.outcomes.assign(n, 0);
  std::vector<QubitId> kept(n);
  std::vector<bool> arrived(n, false);
  Bit parity = 0;
  std::vector<std::size_t> needed;
  if (opts.test_vertex) {
    needed = g.neighbors(*opts.test_vertex);
    needed.push_back(*opts.test_vertex);
  }

  for (std::uint32_t c = 0; c < cols; ++c) {
    for (std::uint32_t r = 0; r < rows; ++r) {
      const std::uint32_t v = r * cols + c;
      ch.send(Party::kServer, Party::kClient, QubitPayload{v, ch.registry().deposit(resource[v])});
      const Message m = ch.recv(Party::kClient);
      const auto* q = std::get_if<QubitPayload>(&m);
      if (!q || q->vertex != v) throw ProtocolError("stream order violation at vertex " + std::to_string(v));
      const QubitId id = ch.registry().resolve(q->ref);
      arrived[v] = true;
      if (opts.test_vertex) {
        // X on v, Z elsewhere: every factor of K_v commutes with the other
        // single-qubit Z measurements, so discarding in Z is harmless.
        const Bit b = v == *opts.test_vertex ? ch.world().measure_xy(id, Angle8::zero(), src).bit
                                             : ch.world().measure_z(id, src).bit;
        run.outcomes[v] = b;
        if (std::find(needed.begin(), needed.end(), v) != needed.end()) parity ^= b;
      } else if (p.is_measured(v)) {
        const FrameParities s = p.parities(v, run.outcomes, frame);
        run.outcomes[v] = ch.world().measure_xy(id, adapt_angle(p.angle(v), s.x, s.z), src).bit;
      } else {
        kept[v] = id;
      }
    }
  }

  if (opts.test_vertex) {
    for (std::size_t v : needed)
      if (!arrived[v]) throw ProtocolError("insufficient qubits streamed for the chosen test");
    run.test_outcome = parity;
  } else {
    std::vector<QubitId> out;
    for (std::size_t v : p.outputs()) out.push_back(kept[v]);
    StateVector s = ch.world().extract(out);
    for (std::size_t i = 0; i < p.outputs().size(); ++i) {
      const FrameParities f = p.parities(p.outputs()[i], run.outcomes, frame);
      if (f.x) apply_pauli(s, i, Pauli::kX);
      if (f.z) apply_pauli(s, i, Pauli::kZ);
    }
    run.output = std::move(s);
  }
  ch.close();
  run.branch_probability = src.branch_probability();
  run.transcript = ch.transcript();
  return run;
}

}  // namespace bqc
