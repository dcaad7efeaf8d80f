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

#include <cmath>
#include <vector>

#include "bqc/errors.hpp"
#include "bqc/mbqc/circuit.hpp"
#include "bqc/mbqc/compiler.hpp"
#include "bqc/quantum/random.hpp"
#include "bqc/ubqc/adversary.hpp"
#include "bqc/ubqc/protocol.hpp"
#include "bqc/verify/ideal.hpp"
#include "bqc/verify/stabilizer_verify.hpp"
#include "bqc/verify/stats.hpp"
#include "bqc/verify/traps.hpp"
#include "support/oracles.hpp"

namespace bqc {
namespace {

Bit expected_report(const TrappedPattern& tp, std::size_t trap) {
  Bit b = tp.keys.at(trap).r;
  for (std::size_t w : tp.pattern.graph().neighbors(trap)) b ^= tp.pattern.vertex(w).dummy_bit;
  return b;
}

TrappedPattern fixed_region(std::uint64_t seed) {
  Rng rng(seed);
  return trap_region(1, 3, 1, rng);
}

TEST(Stats, WilsonAndChiSquare) {
  const Interval i = wilson_interval(50, 100);
  EXPECT_TRUE(i.contains(0.5));
  EXPECT_NEAR(i.lo, 0.4038, 1e-3);
  EXPECT_NEAR(i.hi, 0.5962, 1e-3);
  EXPECT_EQ(wilson_interval(0, 10).lo, 0.0);
  const std::vector<std::size_t> flat(8, 100);
  EXPECT_NEAR(chi_square_uniform(flat), 0.0, 1e-12);
  const std::vector<std::size_t> a{10, 0}, b{0, 10};
  EXPECT_NEAR(total_variation(a, b), 1.0, 1e-12);
}

TEST(Traps, PredictionsFollowKeyAndDummyParity) {
  Rng rng(1);
  for (int i = 0; i < 20; ++i) {
    const TrappedPattern tp = insert_traps(compile_circuit(Circuit{1, {Gate::h(0)}}), 1 + rng.below(2), rng);
    ASSERT_FALSE(tp.traps.empty());
    for (std::size_t t : tp.traps) {
      EXPECT_EQ(tp.predictions.at(t), expected_report(tp, t));
      EXPECT_EQ(tp.pattern.role(t), Role::kTrap);
      for (std::size_t w : tp.pattern.graph().neighbors(t)) EXPECT_EQ(tp.pattern.role(w), Role::kDummy);
    }
  }
}

TEST(Traps, CheckComparesReportedBitsToPredictions) {
  const TrappedPattern tp = fixed_region(2);
  const std::size_t t = tp.traps.at(0);
  std::vector<Bit> reported(tp.pattern.vertex_count(), 0);
  reported[t] = tp.predictions.at(t);
  VerdictReport ok = check_traps(tp, reported);
  EXPECT_TRUE(ok.accepted);
  EXPECT_EQ(ok.traps_checked, 1u);
  reported[t] ^= 1;
  VerdictReport bad = check_traps(tp, reported);
  EXPECT_FALSE(bad.accepted);
  ASSERT_EQ(bad.failures.size(), 1u);
  EXPECT_EQ(bad.failures[0], (TrapFailure{t, tp.predictions.at(t), static_cast<Bit>(reported[t])}));
  reported.pop_back();
  EXPECT_THROW(check_traps(tp, reported), InvalidArgument);
}

TEST(Traps, SmallExamplesOfThePrediction) {
  // All-zero dummies and r = 0 predict 0; one dummy neighbour at 1 predicts 1.
  const BrickworkGraph g(1, 3);
  for (Bit d0 : {Bit{0}, Bit{1}}) {
    TrappedPattern tp{MeasurementPattern(g, {{Role::kDummy, {}, d0}, {Role::kTrap, {}, 0}, {Role::kDummy, {}, 0}}),
                      {1},
                      {0, 2},
                      {},
                      {{1, VertexKey{0, Angle8(3)}}}};
    EXPECT_EQ(expected_report(tp, 1), d0);
    // An honest run with these keys reports exactly that bit.
    for (std::uint64_t s = 0; s < 10; ++s) {
      Rng rng(s);
      UbqcOptions opts;
      opts.fixed_keys = tp.keys;
      EXPECT_EQ(run_ubqc(tp.pattern, rng, opts).reported[1], d0);
    }
  }
}

TEST(Traps, RegionRejectsImpossibleRequests) {
  Rng rng(1);
  EXPECT_THROW(trap_region(1, 1, 1, rng), InvalidArgument);
  EXPECT_THROW(trap_region(1, 3, 2, rng), InvalidArgument);
  EXPECT_THROW(insert_traps(compile_circuit(Circuit{1, {}}), 1, rng, 0), InvalidArgument);
}

TEST(Detection, HonestServerIsAlwaysAccepted) {
  Rng rng(3);
  const VerdictReport r = detection_rate([](Rng& g) { return trap_region(2, 5, 2, g); }, [] { return honest_server(); },
                                         300, rng);
  ASSERT_TRUE(r.estimate.has_value());
  EXPECT_EQ(r.estimate->rejections, 0u);
  EXPECT_TRUE(r.accepted);
}

TEST(Detection, DeterministicAttacksOnTheTrapNeighbourhood) {
  const TrappedPattern tp = fixed_region(4);
  const std::uint32_t t = static_cast<std::uint32_t>(tp.traps.at(0));
  const std::uint32_t d = static_cast<std::uint32_t>(tp.pattern.graph().neighbors(t).at(0));
  const auto gen = [&tp](Rng&) { return tp; };
  auto rate = [&](AdversaryFactory f) {
    Rng rng(5);
    return detection_rate(gen, f, 100, rng).estimate->rate;
  };
  // Z on the trap flips its XY outcome.
  EXPECT_EQ(rate([t] { return pauli_on_vertex(t, Pauli::kZ); }), 1.0);
  // X on a dummy after the CZs is a dummy flip plus a Z on the trap before
  // them; the two kicks on the trap cancel.
  EXPECT_EQ(rate([d] { return pauli_on_vertex(d, Pauli::kX); }), 0.0);
  // Z on a dummy is a phase.
  EXPECT_EQ(rate([d] { return pauli_on_vertex(d, Pauli::kZ); }), 0.0);
  // Lying about the trap is caught, lying elsewhere is not.
  EXPECT_EQ(rate([t] { return flip_outcomes({t}); }), 1.0);
  EXPECT_EQ(rate([d] { return flip_outcomes({d}); }), 0.0);
}

TEST(Detection, RandomPauliMatchesExhaustiveOracle) {
  const double want = oracle::single_row_trap_detection(3);
  Rng rng(6);
  const std::size_t trials = 3000;
  const VerdictReport r = detection_rate([](Rng& g) { return trap_region(1, 3, 1, g); },
                                         [] { return random_pauli_random_qubit(); }, trials, rng);
  const Interval wide = wilson_interval(r.estimate->rejections, trials, 3.3);
  EXPECT_TRUE(wide.contains(want)) << r.estimate->rate << " vs " << want;
}

TEST(Detection, ZeroTrialsThrows) {
  Rng rng(1);
  EXPECT_THROW(detection_rate([](Rng& g) { return trap_region(1, 3, 1, g); }, [] { return honest_server(); }, 0, rng),
               InvalidArgument);
}

TEST(StabilizerVerify, NoTestSessionsIsVacuous) {
  const MeasurementPattern p = compile_circuit(Circuit{1, {Gate::t(0)}});
  Rng rng(1);
  const VerdictReport r = stabilizer_verify(p, 0.0, 50, StreamingServer::kProductState, rng);
  EXPECT_TRUE(r.accepted);
  EXPECT_EQ(r.traps_checked, 0u);
}

TEST(StabilizerVerify, SeparatesHonestFromProductServers) {
  const MeasurementPattern p = compile_circuit(Circuit{1, {Gate::t(0)}});
  Rng a(2), b(3);
  const VerdictReport honest = stabilizer_verify(p, 1.0, 300, StreamingServer::kHonest, a);
  EXPECT_TRUE(honest.accepted);
  EXPECT_EQ(honest.estimate->rejections, 0u);
  const VerdictReport product = stabilizer_verify(p, 1.0, 300, StreamingServer::kProductState, b, 1);
  EXPECT_FALSE(product.accepted);
  const double want = oracle::product_state_kv_failure(p.vertex_count(), 1, p.graph().neighbors(1));
  EXPECT_TRUE(wilson_interval(product.estimate->rejections, 300, 3.3).contains(want));
  Rng c(4);
  EXPECT_THROW(stabilizer_verify(p, 1.5, 1, StreamingServer::kHonest, c), InvalidArgument);
}

TEST(Ideal, AllFourModeFlagBranches) {
  const Circuit c{1, {Gate::h(0)}};
  IdealResource blind{IdealMode::kBlind, circuit_unitary(c)};
  const StateVector zero = StateVector::basis(1, 0);
  // Blind, b = 0: U|0> = |+>.
  EXPECT_NEAR(ideal_resource_eval(blind, zero).fidelity(StateVector::plus(1)), 1.0, 1e-12);
  // Blind, b = 1: the server's map gets the joint input.
  ServerInputs dev;
  dev.flag = 1;
  dev.psi_b = StateVector::basis(1, 1);
  dev.deviation = [](const DensityMatrix& rho) { return rho; };
  EXPECT_NEAR(ideal_resource_eval(blind, zero, dev).fidelity(StateVector::basis(2, 0b10)), 1.0, 1e-12);
  dev.deviation = nullptr;
  EXPECT_THROW(ideal_resource_eval(blind, zero, dev), InvalidArgument);
  // Blind-verifiable: flag qubit last, |0> when accepted, error state otherwise.
  IdealResource verif{IdealMode::kBlindVerif, circuit_unitary(c)};
  const StateVector accepted = StateVector::plus(1).tensor(StateVector::basis(1, 0));
  EXPECT_NEAR(ideal_resource_eval(verif, zero).fidelity(accepted), 1.0, 1e-12);
  ServerInputs cheat;
  cheat.flag = 1;
  EXPECT_NEAR(ideal_resource_eval(verif, zero, cheat).fidelity(StateVector::basis(2, 0b10)), 1.0, 1e-12);
}

TEST(Ideal, BatteryAndEpsilon) {
  EXPECT_EQ(input_battery(2, true).size(), 5u);
  EXPECT_EQ(input_battery(2, false).size(), 8u);
  const Circuit c{1, {Gate::t(0), Gate::h(0)}};
  const IdealResource ideal{IdealMode::kBlind, circuit_unitary(c)};
  EXPECT_THROW(epsilon_correctness([](const StateVector& s) { return DensityMatrix::pure(s); }, ideal, {}),
               InvalidArgument);
  // The identity channel is off by the trace distance between psi and U psi.
  const std::vector<StateVector> in{StateVector::basis(1, 0)};
  const double got = epsilon_correctness([](const StateVector& s) { return DensityMatrix::pure(s); }, ideal, in);
  EXPECT_NEAR(got, std::sqrt(1 - fidelity(in[0], simulate_circuit(c, in[0]))), 1e-9);
}

TEST(Ideal, ProtocolModesAreCorrectAndTheCanaryIsNot) {
  const Circuit c{1, {Gate::t(0), Gate::h(0)}};
  for (ProtocolMode m : {ProtocolMode::kUbqc, ProtocolMode::kUbqcTrapped, ProtocolMode::kClientMeasuring,
                         ProtocolMode::kTwoServer, ProtocolMode::kChilds, ProtocolMode::kChildsHidden})
    EXPECT_LT(mode_epsilon(m, c, 1), 1e-9) << protocol_mode_name(m);
  EXPECT_GT(mode_epsilon(ProtocolMode::kUbqc, c, 1, DeltaRule::kMisSignedCanary), 0.1);
}

}  // namespace
}  // namespace bqc
