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

#include "bqc/childs/encrypted.hpp"

#include <numeric>
#include <string>

#include "bqc/errors.hpp"

namespace bqc {

namespace {

template <class T>
T expect(Channel& ch, Party to) {
  Message m = ch.recv(to);
  if (auto* t = std::get_if<T>(&m)) return *t;
  throw ProtocolError("unexpected " + describe(m));
}

}  // namespace

ChildsSession::ChildsSession(ProtocolId protocol, const StateVector& plaintext, Rng& rng,
                             std::optional<PauliKey> initial_key)
    : channel_(SessionInfo{protocol, static_cast<std::uint32_t>(plaintext.qubits() + kAncillas), 0, rng.seed()}),
      rng_(rng),
      data_(plaintext.qubits()) {
  if (protocol != ProtocolId::kChilds && protocol != ProtocolId::kChildsHidden)
    throw InvalidArgument("not an encrypted-compute protocol");
  const std::size_t n = data_ + kAncillas;
  check_qubit_count(n);
  key_ = initial_key ? *initial_key : PauliKey::random(n, rng_);
  if (key_.size() != n) throw InvalidArgument("initial key must cover data and ancilla qubits");
  ids_ = channel_.world().add_block(qotp_encrypt(plaintext.tensor(StateVector(kAncillas)), key_));
}

void ChildsSession::round(GateKind kind, std::array<std::size_t, 2> targets) {
  const std::size_t arity = gate_arity(kind);
  for (std::size_t i = 0; i < arity; ++i) {
    const std::size_t q = targets[i];
    if (q >= ids_.size()) throw InvalidArgument("gate target " + std::to_string(q) + " out of range");
    // Fresh pad on top of the current one.
    const Bit a = rng_.bit(), b = rng_.bit();
    if (b) channel_.world().apply_pauli(ids_[q], Pauli::kZ);
    if (a) channel_.world().apply_pauli(ids_[q], Pauli::kX);
    key_.x[q] ^= a;
    key_.z[q] ^= b;
    channel_.send(Party::kClient, Party::kServer,
                  QubitPayload{static_cast<std::uint32_t>(i), channel_.registry().deposit(ids_[q])});
  }
  channel_.send(Party::kClient, Party::kServer, GateRequest{kind});

  // Server: apply the gate to whatever arrived, in arrival order, and return it.
  std::vector<QubitId> held;
  for (std::size_t i = 0; i < arity; ++i)
    held.push_back(channel_.registry().resolve(expect<QubitPayload>(channel_, Party::kServer).ref));
  const auto req = expect<GateRequest>(channel_, Party::kServer);
  channel_.world().apply(req.gate, held[0], arity == 2 ? std::optional<QubitId>(held[1]) : std::nullopt);
  for (std::size_t i = 0; i < arity; ++i)
    channel_.send(Party::kServer, Party::kClient,
                  QubitPayload{static_cast<std::uint32_t>(i), channel_.registry().deposit(held[i])});

  for (std::size_t i = 0; i < arity; ++i) {
    const QubitId q = channel_.registry().resolve(expect<QubitPayload>(channel_, Party::kClient).ref);
    if (q != ids_[targets[i]]) throw ProtocolError("server returned a different qubit");
  }
  ++rounds_;
}

void ChildsSession::request(const Gate& g) {
  switch (g.kind) {
    case GateKind::kH:
    case GateKind::kS:
    case GateKind::kCNOT:
    case GateKind::kCZ: break;
    default: throw InvalidArgument(std::string(gate_name(g.kind)) + " cannot be requested as a Clifford round");
  }
  if (g.arity() == 2 && g.targets[0] == g.targets[1]) throw InvalidArgument("two-qubit gate on a single wire");
  round(g.kind, g.targets);
  key_ = key_update_clifford(key_, g);
}

void ChildsSession::apply_pauli_gate(const Gate& g) { key_ = key_absorb_pauli(key_, g); }

bool ChildsSession::apply_t_gadget(std::size_t q) {
  if (q >= ids_.size()) throw InvalidArgument("T target out of range");
  round(GateKind::kT, {q, 0});
  // T X^x Z^z = X^x Z^z T^(+-1) up to phase; S T^-1 = T.
  const bool on_target = key_.x[q] != 0;
  request(Gate::s(on_target ? q : ancilla(0)));
  return on_target;
}

StateVector ChildsSession::ciphertext() const { return channel_.world().extract(ids_); }

StateVector ChildsSession::decrypt_all() const { return qotp_decrypt(ciphertext(), key_); }

DensityMatrix ChildsSession::decrypt_data() const {
  std::vector<std::size_t> keep(data_);
  std::iota(keep.begin(), keep.end(), 0);
  return reduced_density(decrypt_all(), keep);
}

Transcript ChildsSession::finish() {
  channel_.close();
  return channel_.transcript();
}

void validate_encrypted_circuit(const Circuit& c) {
  if (c.wires == 0) throw InvalidArgument("circuit needs at least one wire");
  for (std::size_t i = 0; i < c.gates.size(); ++i) {
    const Gate& g = c.gates[i];
    const std::string where = "gate " + std::to_string(i) + " (" + std::string(gate_name(g.kind)) + ")";
    if (g.kind == GateKind::kRZ) throw InvalidArgument(where + ": not in the encrypted-compute gate set");
    if (g.targets[0] >= c.wires) throw InvalidArgument(where + ": wire out of range");
    if (g.arity() == 2 && (g.targets[1] >= c.wires || g.targets[1] == g.targets[0]))
      throw InvalidArgument(where + ": bad second wire");
  }
}

EncryptedRun run_encrypted_circuit(const Circuit& c, const StateVector& input, Rng& rng) {
  validate_encrypted_circuit(c);
  if (input.qubits() != c.wires) throw InvalidArgument("input width does not match circuit");
  ChildsSession session(ProtocolId::kChilds, input, rng);
  for (const Gate& g : c.gates) {
    switch (g.kind) {
      case GateKind::kT: session.apply_t_gadget(g.targets[0]); break;
      case GateKind::kX:
      case GateKind::kY:
      case GateKind::kZ: session.apply_pauli_gate(g); break;
      default: session.request(g);
    }
  }
  EncryptedRun run;
  run.output = session.decrypt_data();
  run.rounds = session.rounds();
  run.transcript = session.finish();
  return run;
}

namespace {

enum Slot : std::size_t { kSlotH = 0, kSlotCnot = 1, kSlotT = 2, kSlotS = 3 };

// Gate list with CZ expanded; Paulis stay (they take no slot).
std::vector<Gate> hidden_gates(const Circuit& c) {
  validate_encrypted_circuit(c);
  std::vector<Gate> out;
  for (const Gate& g : c.gates) {
    if (g.kind == GateKind::kCZ) {
      out.push_back(Gate::h(g.targets[1]));
      out.push_back(Gate::cnot(g.targets[0], g.targets[1]));
      out.push_back(Gate::h(g.targets[1]));
    } else {
      out.push_back(g);
    }
  }
  return out;
}

std::size_t slot_of(GateKind k) {
  switch (k) {
    case GateKind::kH: return kSlotH;
    case GateKind::kCNOT: return kSlotCnot;
    case GateKind::kT: return kSlotT;
    default: return kSlotS;
  }
}

bool is_pauli(GateKind k) { return k == GateKind::kX || k == GateKind::kY || k == GateKind::kZ; }

// Greedy in-order packing. `emit(cycle, slot, gate or nullptr)` is called for
// every slot in order, nullptr meaning a decoy. The T slot holds a whole
// gadget (T plus its S correction), real or decoy, so every cycle shows the
// same requests: H, CNOT, T, S, S.
template <class Emit, class Pauli>
std::size_t pack(const std::vector<Gate>& gates, std::size_t min_cycles, Emit emit, Pauli pauli) {
  std::size_t cycle = 0, next = 0;
  auto fill_to = [&](std::size_t slot) {
    for (; next < slot; ++next) emit(cycle, next, nullptr);
  };
  for (const Gate& g : gates) {
    if (is_pauli(g.kind)) {
      pauli(g);
      continue;
    }
    const std::size_t s = slot_of(g.kind);
    if (s < next) {
      fill_to(4);
      ++cycle;
      next = 0;
    }
    fill_to(s);
    emit(cycle, s, &g);
    next = s + 1;
  }
  std::size_t cycles = next == 0 ? cycle : cycle + 1;
  if (next > 0) fill_to(4);
  if (min_cycles > cycles) {
    for (std::size_t k = cycles; k < min_cycles; ++k) {
      cycle = k;
      next = 0;
      fill_to(4);
    }
    cycles = min_cycles;
  }
  return cycles;
}

}  // namespace

std::size_t hidden_cycle_count(const Circuit& c) {
  return pack(hidden_gates(c), 0, [](std::size_t, std::size_t, const Gate*) {}, [](const Gate&) {});
}

EncryptedRun run_hidden_circuit(const Circuit& c, const StateVector& input, Rng& rng,
                                std::optional<std::size_t> min_cycles) {
  const auto gates = hidden_gates(c);
  if (input.qubits() != c.wires) throw InvalidArgument("input width does not match circuit");
  const std::size_t needed = hidden_cycle_count(c);
  if (min_cycles && *min_cycles < needed)
    throw InvalidArgument("circuit needs " + std::to_string(needed) + " cycles, " + std::to_string(*min_cycles) +
                          " requested");
  ChildsSession session(ProtocolId::kChildsHidden, input, rng);
  const std::size_t a0 = session.ancilla(0), a1 = session.ancilla(1);
  EncryptedRun run;
  run.cycles = pack(
      gates, min_cycles.value_or(0),
      [&](std::size_t, std::size_t slot, const Gate* g) {
        if (g && g->kind == GateKind::kT) {
          session.apply_t_gadget(g->targets[0]);
          return;
        }
        if (g) {
          session.request(*g);
          return;
        }
        switch (slot) {
          case kSlotH: session.request(Gate::h(a0)); break;
          case kSlotCnot: session.request(Gate::cnot(a0, a1)); break;
          case kSlotT: session.apply_t_gadget(a0); break;
          default: session.request(Gate::s(a0));
        }
      },
      [&](const Gate& g) { session.apply_pauli_gate(g); });
  run.output = session.decrypt_data();
  run.rounds = session.rounds();
  run.transcript = session.finish();
  return run;
}

Bytes request_trace(const Transcript& t) {
  ByteWriter w;
  for (const auto& e : t.entries()) write_record(w, e.seq, e.from, e.to, e.message);
  return w.take();
}

}  // namespace bqc
