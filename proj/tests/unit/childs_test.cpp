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


#include <gtest/gtest.h>

#include <vector>

#include "bqc/childs/encrypted.hpp"
#include "bqc/childs/pauli_key.hpp"
#include "bqc/errors.hpp"
#include "bqc/mbqc/circuit.hpp"
#include "bqc/quantum/density_matrix.hpp"
#include "bqc/quantum/random.hpp"
#include "support/oracles.hpp"

namespace bqc {
namespace {

std::vector<int> ints(const std::vector<Bit>& b) { return {b.begin(), b.end()}; }

oracle::Mat gate_oracle(const Gate& g, std::size_t n) {
  switch (g.kind) {
    case GateKind::kH: return oracle::on(n, g.targets[0], oracle::H());
    case GateKind::kS: return oracle::on(n, g.targets[0], oracle::S());
    case GateKind::kX: return oracle::on(n, g.targets[0], oracle::X());
    case GateKind::kY: return oracle::on(n, g.targets[0], oracle::Y());
    case GateKind::kZ: return oracle::on(n, g.targets[0], oracle::Z());
    case GateKind::kCNOT: return oracle::cnot(n, g.targets[0], g.targets[1]);
    case GateKind::kCZ: return oracle::cz(n, g.targets[0], g.targets[1]);
    default: break;
  }
  ADD_FAILURE() << "no oracle for " << gate_name(g.kind);
  return oracle::Mat::Identity(1, 1);
}

Circuit random_clifford_t(std::size_t wires, std::size_t gates, Rng& rng) {
  Circuit c{wires, {}};
  for (std::size_t i = 0; i < gates; ++i) {
    const std::size_t q = rng.below(wires);
    switch (rng.below(wires > 1 ? 7 : 5)) {
      case 0: c.gates.push_back(Gate::h(q)); break;
      case 1: c.gates.push_back(Gate::s(q)); break;
      case 2: c.gates.push_back(Gate::t(q)); break;
      case 3: c.gates.push_back(Gate::x(q)); break;
      case 4: c.gates.push_back(Gate::z(q)); break;
      case 5: c.gates.push_back(q + 1 < wires ? Gate::cnot(q + 1, q) : Gate::cnot(q - 1, q)); break;
      default: c.gates.push_back(q + 1 < wires ? Gate::cz(q, q + 1) : Gate::cz(q - 1, q)); break;
    }
  }
  return c;
}

TEST(PauliKey, FromIndexLayout) {
  const PauliKey k = PauliKey::from_index(2, 0b1001);
  EXPECT_EQ(k.x, (std::vector<Bit>{1, 0}));
  EXPECT_EQ(k.z, (std::vector<Bit>{0, 1}));
}

TEST(PauliKey, CliffordUpdateMatchesConjugationOracle) {
  const std::size_t n = 2;
  const std::vector<Gate> gates{Gate::h(0), Gate::h(1), Gate::s(0), Gate::s(1), Gate::cnot(0, 1),
                                Gate::cnot(1, 0), Gate::cz(0, 1), Gate::x(0), Gate::y(1), Gate::z(0)};
  for (const Gate& g : gates) {
    for (std::size_t idx = 0; idx < 16; ++idx) {
      const PauliKey k = PauliKey::from_index(n, idx);
      std::vector<int> xo, zo;
      ASSERT_TRUE(oracle::conjugated_key(gate_oracle(g, n), ints(k.x), ints(k.z), xo, zo));
      const PauliKey got = key_update_clifford(k, g);
      EXPECT_EQ(ints(got.x), xo) << gate_name(g.kind) << " key " << idx;
      EXPECT_EQ(ints(got.z), zo) << gate_name(g.kind) << " key " << idx;
    }
  }
  EXPECT_THROW(key_update_clifford(PauliKey::zero(1), Gate::t(0)), InvalidArgument);
}

TEST(PauliKey, EncryptThenDecryptIsIdentity) {
  Rng rng(1);
  for (int i = 0; i < 20; ++i) {
    const StateVector s = StateVector::random(3, rng);
    const PauliKey k = PauliKey::random(3, rng);
    EXPECT_NEAR(fidelity(qotp_decrypt(qotp_encrypt(s, k), k), s), 1.0, 1e-12);
    // Global phase too: decrypt undoes encrypt exactly.
    EXPECT_NEAR(std::abs(qotp_decrypt(qotp_encrypt(s, k), k).inner(s) - cplx(1, 0)), 0.0, 1e-12);
  }
}

TEST(PauliKey, AveragedCiphertextIsMaximallyMixed) {
  Rng rng(2);
  const StateVector s = StateVector::random(2, rng);
  std::vector<MixtureTerm> terms;
  for (std::size_t idx = 0; idx < 16; ++idx) terms.emplace_back(1.0 / 16, qotp_encrypt(s, PauliKey::from_index(2, idx)));
  EXPECT_LT(trace_distance(mix(terms), DensityMatrix::maximally_mixed(2)), 1e-12);
}

TEST(PauliKey, AbsorbPauliXorsBits) {
  PauliKey k = PauliKey::zero(2);
  k = key_absorb_pauli(k, Gate::y(1));
  EXPECT_EQ(k.x, (std::vector<Bit>{0, 1}));
  EXPECT_EQ(k.z, (std::vector<Bit>{0, 1}));
  k = key_absorb_pauli(k, Gate::x(1));
  EXPECT_EQ(k.x, (std::vector<Bit>{0, 0}));
}

TEST(Encrypted, RandomCircuitsDecryptCorrectly) {
  Rng rng(31);
  for (int trial = 0; trial < 25; ++trial) {
    const Circuit c = random_clifford_t(3, 15, rng);
    const StateVector in = StateVector::random(3, rng);
    Rng session = rng.fork(static_cast<std::uint64_t>(trial));
    const EncryptedRun run = run_encrypted_circuit(c, in, session);
    EXPECT_NEAR(run.output.fidelity(simulate_circuit(c, in)), 1.0, 1e-9) << "trial " << trial;
  }
}

TEST(Encrypted, RoundCountIsOnePerGateAndTwoPerT) {
  const Circuit c{2, {Gate::h(0), Gate::t(1), Gate::x(0), Gate::cz(0, 1)}};
  Rng rng(3);
  // H: 1, T: 2 (T and its S), X: 0, CZ: 1.
  EXPECT_EQ(run_encrypted_circuit(c, StateVector::plus(2), rng).rounds, 4u);
}

TEST(Encrypted, RejectsNonCliffordTGates) {
  const Circuit c{1, {Gate::rz(0, Angle8(3))}};
  Rng rng(1);
  EXPECT_THROW(validate_encrypted_circuit(c), InvalidArgument);
  EXPECT_THROW(run_encrypted_circuit(c, StateVector::plus(1), rng), InvalidArgument);
}

TEST(Encrypted, GadgetBranchesLookTheSameOnTheWire) {
  Rng rng(4);
  const StateVector in = StateVector::random(1, rng);
  std::vector<Bytes> traces;
  for (Bit x = 0; x < 2; ++x) {
    PauliKey k = PauliKey::zero(1 + ChildsSession::kAncillas);
    k.x[0] = x;
    Rng session_rng(5);
    ChildsSession s(ProtocolId::kChilds, in, session_rng, k);
    s.apply_t_gadget(0);
    // Pads are refreshed inside the T round, so check against the decrypted state.
    StateVector want = in;
    apply(want, Gate::t(0));
    const std::vector<std::size_t> keep{0};
    EXPECT_NEAR(reduced_density(s.decrypt_all(), keep).fidelity(want), 1.0, 1e-9);
    traces.push_back(request_trace(s.finish()));
  }
  EXPECT_EQ(traces[0], traces[1]);
}

TEST(Encrypted, SessionRejectsBadKeysAndTargets) {
  Rng rng(1);
  EXPECT_THROW(ChildsSession(ProtocolId::kChilds, StateVector::plus(1), rng, PauliKey::zero(1)), InvalidArgument);
  EXPECT_THROW(ChildsSession(ProtocolId::kUbqc, StateVector::plus(1), rng), InvalidArgument);
  ChildsSession s(ProtocolId::kChilds, StateVector::plus(1), rng);
  EXPECT_THROW(s.request(Gate::t(0)), InvalidArgument);
  EXPECT_THROW(s.request(Gate::h(5)), InvalidArgument);
}

TEST(Hidden, CycleCountPacksGreedily) {
  EXPECT_EQ(hidden_cycle_count(Circuit{1, {}}), 0u);
  EXPECT_EQ(hidden_cycle_count(Circuit{1, {Gate::h(0), Gate::t(0)}}), 1u);
  // S then H cannot share a cycle (S is the last slot).
  EXPECT_EQ(hidden_cycle_count(Circuit{1, {Gate::s(0), Gate::h(0)}}), 2u);
  // The S slot after a T is still free.
  EXPECT_EQ(hidden_cycle_count(Circuit{1, {Gate::t(0), Gate::s(0)}}), 1u);
  EXPECT_EQ(hidden_cycle_count(Circuit{1, {Gate::t(0), Gate::t(0)}}), 2u);
  // Paulis take no slot.
  EXPECT_EQ(hidden_cycle_count(Circuit{1, {Gate::h(0), Gate::x(0), Gate::z(0)}}), 1u);
}

TEST(Hidden, CircuitsWithEqualCyclesHaveEqualTraces) {
  const Circuit a{2, {Gate::h(0), Gate::cnot(0, 1), Gate::t(1)}};
  const Circuit b{2, {Gate::s(1), Gate::x(0)}};
  const std::size_t cycles = std::max(hidden_cycle_count(a), hidden_cycle_count(b));
  Rng ra(1), rb(2);
  const EncryptedRun run_a = run_hidden_circuit(a, StateVector::plus(2), ra, cycles);
  const EncryptedRun run_b = run_hidden_circuit(b, StateVector::plus(2), rb, cycles);
  EXPECT_EQ(run_a.cycles, cycles);
  EXPECT_EQ(request_trace(run_a.transcript), request_trace(run_b.transcript));
  EXPECT_NEAR(run_a.output.fidelity(simulate_circuit(a)), 1.0, 1e-9);
  EXPECT_NEAR(run_b.output.fidelity(simulate_circuit(b)), 1.0, 1e-9);
  Rng rc(3);
  EXPECT_THROW(run_hidden_circuit(a, StateVector::plus(2), rc, 0), InvalidArgument);
}

TEST(Hidden, RandomPairsPaddedToEqualCyclesShareATrace) {
  Rng rng(9);
  for (int trial = 0; trial < 30; ++trial) {
    const Circuit a = random_clifford_t(2, rng.below(12), rng), b = random_clifford_t(2, rng.below(12), rng);
    const std::size_t cycles = std::max(hidden_cycle_count(a), hidden_cycle_count(b));
    Rng ra = rng.fork(2 * static_cast<std::uint64_t>(trial)), rb = rng.fork(2 * static_cast<std::uint64_t>(trial) + 1);
    const Bytes ta = request_trace(run_hidden_circuit(a, StateVector::plus(2), ra, cycles).transcript);
    const Bytes tb = request_trace(run_hidden_circuit(b, StateVector::plus(2), rb, cycles).transcript);
    EXPECT_EQ(ta, tb) << "trial " << trial;
  }
}

TEST(Hidden, RandomCircuitsStayCorrect) {
  Rng rng(8);
  for (int trial = 0; trial < 10; ++trial) {
    const Circuit c = random_clifford_t(2, 10, rng);
    const StateVector in = StateVector::random(2, rng);
    Rng session = rng.fork(static_cast<std::uint64_t>(trial));
    const EncryptedRun run = run_hidden_circuit(c, in, session);
    EXPECT_EQ(run.cycles, hidden_cycle_count(c));
    EXPECT_NEAR(run.output.fidelity(simulate_circuit(c, in)), 1.0, 1e-9);
  }
}

}  // namespace
}  // namespace bqc
