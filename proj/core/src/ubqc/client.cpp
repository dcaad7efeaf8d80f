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

#include "bqc/ubqc/client.hpp"

#include <algorithm>
#include <string>

#include "bqc/errors.hpp"
#include "bqc/mbqc/flow.hpp"

namespace bqc {

namespace {

bool is_input(const MeasurementPattern& p, std::size_t v) {
  return std::find(p.inputs().begin(), p.inputs().end(), v) != p.inputs().end();
}

void check_turn(const ClientState& cs, std::size_t v) {
  const auto& order = cs.pattern.order();
  if (cs.cursor >= order.size() || order[cs.cursor] != v)
    throw ProtocolError("vertex " + std::to_string(v) + " is out of turn (dependencies not yet available)");
}

}  // namespace

ClientState client_init(const MeasurementPattern& p, Rng& rng, const ClientOptions& opts) {
  const std::size_t n = p.vertex_count();
  check_qubit_count(n);
  ClientState cs{p, std::vector<Bit>(n), std::vector<Angle8>(n), std::vector<Bit>(n, 0), p.static_frame(),
                 std::vector<Bit>(n, 0), 0, opts.rule, opts.input};
  for (std::size_t v = 0; v < n; ++v) {
    cs.r[v] = rng.bit();
    cs.theta[v] = rng.angle();
  }
  if (opts.input) {
    if (opts.input->qubits() != p.logical_width())
      throw InvalidArgument("input width does not match the pattern");
    for (std::size_t v : p.inputs()) {
      cs.input_x[v] = rng.bit();
      add_input_x(cs.frame, p.graph(), v, cs.input_x[v]);
    }
  }
  for (const auto& [v, key] : opts.fixed_keys) {
    if (v >= n) throw InvalidArgument("fixed key for unknown vertex " + std::to_string(v));
    cs.r[v] = key.r;
    cs.theta[v] = key.theta;
  }
  return cs;
}

StateVector payload_state(const ClientState& cs, std::size_t v) {
  const VertexSpec& spec = cs.pattern.vertex(v);
  if (spec.role == Role::kDummy) return StateVector::basis(1, spec.dummy_bit);
  if (cs.input && is_input(cs.pattern, v)) throw InvalidArgument("input vertices carry a joint payload");
  return prepare_plus_theta(cs.r[v], -cs.theta[v]);
}

std::vector<QubitId> prepare_payloads(const ClientState& cs, QubitRegister& world) {
  const MeasurementPattern& p = cs.pattern;
  std::vector<QubitId> ids(p.vertex_count());
  if (cs.input) {
    StateVector block = *cs.input;
    for (std::size_t i = 0; i < p.inputs().size(); ++i) {
      const std::size_t v = p.inputs()[i];
      if (cs.input_x[v]) apply_pauli(block, i, Pauli::kX);
      apply(block, Gate::rz(i, -cs.theta[v]));
      if (cs.r[v]) apply_pauli(block, i, Pauli::kZ);
    }
    auto block_ids = world.add_block(block);
    for (std::size_t i = 0; i < p.inputs().size(); ++i) ids[p.inputs()[i]] = block_ids[i];
  }
  for (std::size_t v = 0; v < p.vertex_count(); ++v) {
    if (cs.input && is_input(p, v)) continue;
    ids[v] = world.add(payload_state(cs, v));
  }
  return ids;
}

Angle8 client_delta(const ClientState& cs, std::size_t v) {
  check_turn(cs, v);
  Angle8 phi{};
  if (cs.pattern.role(v) == Role::kCompute) {
    const FrameParities s = cs.pattern.parities(v, cs.m, cs.frame);
    phi = adapt_angle(cs.pattern.angle(v), s.x, s.z);
  }
  return cs.rule == DeltaRule::kStandard ? phi - cs.theta[v] : phi + cs.theta[v];
}

Bit client_decode(ClientState& cs, std::size_t v, Bit b) {
  check_turn(cs, v);
  if (b > 1) throw ProtocolError("reported bit is not 0/1");
  cs.m[v] = b ^ cs.r[v];
  ++cs.cursor;
  return cs.m[v];
}

StateVector client_decrypt_outputs(const ClientState& cs, QubitRegister& world, const std::vector<QubitId>& last_column,
                                   Rng& rng) {
  const MeasurementPattern& p = cs.pattern;
  const auto& g = p.graph();
  if (cs.cursor != p.order().size()) throw ProtocolError("outputs requested before every round finished");
  if (last_column.size() != g.rows()) throw ProtocolError("expected the whole last column back");
  std::vector<QubitId> out;
  for (std::size_t r = 0; r < g.rows(); ++r) {
    const std::size_t v = g.id(r, g.cols() - 1);
    const QubitId q = last_column[r];
    if (p.role(v) == Role::kDummy) {
      OutcomeSource src = OutcomeSource::sampled(rng);
      world.measure_z(q, src);
      continue;
    }
    if (cs.r[v]) world.apply_pauli(q, Pauli::kZ);
    world.apply(GateKind::kRZ, q, std::nullopt, cs.theta[v]);
    const FrameParities s = p.parities(v, cs.m, cs.frame);
    if (s.x) world.apply_pauli(q, Pauli::kX);
    if (s.z) world.apply_pauli(q, Pauli::kZ);
    out.push_back(q);
  }
  return world.extract(out);
}

SecretSet client_secrets(const ClientState& cs) {
  SecretSet s;
  for (std::size_t v = 0; v < cs.r.size(); ++v) {
    const auto i = static_cast<std::uint32_t>(v);
    s.add("THETA", i, static_cast<std::uint8_t>(cs.theta[v].k()));
    s.add("R", i, cs.r[v]);
    s.add("PHI", i, static_cast<std::uint8_t>(cs.pattern.angle(v).k()));
    s.add("X", i, cs.input_x[v]);
  }
  return s;
}

}  // namespace bqc
