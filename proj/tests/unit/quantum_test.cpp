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
#include "bqc/quantum/density_matrix.hpp"
#include "bqc/quantum/gates.hpp"
#include "bqc/quantum/measure.hpp"
#include "bqc/quantum/qubit_register.hpp"
#include "bqc/quantum/random.hpp"
#include "bqc/quantum/state_vector.hpp"
#include "support/oracles.hpp"

namespace bqc {
namespace {

oracle::Vec as_vec(const StateVector& s) {
  return Eigen::Map<const Eigen::VectorXcd>(s.amplitudes().data(), static_cast<Eigen::Index>(s.dimension()));
}

oracle::Mat oracle_single(GateKind k, int angle = 0) {
  switch (k) {
    case GateKind::kH: return oracle::H();
    case GateKind::kS: return oracle::S();
    case GateKind::kT: return oracle::T();
    case GateKind::kX: return oracle::X();
    case GateKind::kY: return oracle::Y();
    case GateKind::kZ: return oracle::Z();
    case GateKind::kRZ: return oracle::Rz(angle);
    default: break;
  }
  ADD_FAILURE() << "not single-qubit";
  return oracle::I2();
}

TEST(Angle8, ArithmeticIsModEight) {
  for (int a = -16; a < 16; ++a) {
    for (int b = -16; b < 16; ++b) {
      const Angle8 x(a), y(b);
      EXPECT_EQ((x + y).k(), (((a + b) % 8) + 8) % 8);
      EXPECT_EQ((x - y).k(), (((a - b) % 8) + 8) % 8);
      EXPECT_EQ((x + (-x)).k(), 0);
    }
  }
  EXPECT_NEAR(Angle8(2).radians(), oracle::kPi / 2, 1e-15);
}

TEST(Rng, ForkIsDeterministicAndIndependentOfParentState) {
  Rng a(42), b(42);
  a.next_u64();
  a.next_u64();
  Rng fa = a.fork(7), fb = b.fork(7);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(fa.next_u64(), fb.next_u64());
  EXPECT_NE(Rng(42).fork(1).next_u64(), Rng(42).fork(2).next_u64());
}

TEST(Rng, BelowAndUniformStayInRange) {
  Rng r(5);
  std::vector<std::size_t> counts(6, 0);
  for (int i = 0; i < 60000; ++i) {
    const double u = r.uniform();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
    ++counts[r.below(6)];
  }
  for (auto c : counts) EXPECT_NEAR(static_cast<double>(c) / 60000.0, 1.0 / 6, 0.01);
  EXPECT_THROW(r.below(0), InvalidArgument);
}

TEST(StateVector, ConstructorsAreNormalized) {
  EXPECT_NEAR(StateVector::plus(5).norm_squared(), 1.0, 1e-12);
  EXPECT_EQ(StateVector::basis(3, 5)[5], cplx(1, 0));
  Rng rng(1);
  EXPECT_NEAR(StateVector::random(4, rng).norm_squared(), 1.0, 1e-12);
  EXPECT_THROW(StateVector::from_amplitudes({1, 0, 0}), InvalidArgument);
  EXPECT_THROW(StateVector(kMaxQubits + 1), CapacityError);
}

TEST(StateVector, ZeroQubitStateIsTheScalarOne) {
  const StateVector s(0);
  EXPECT_EQ(s.dimension(), 1u);
  EXPECT_NEAR(s.norm_squared(), 1.0, 1e-15);
  Rng rng(2);
  const StateVector psi = StateVector::random(2, rng);
  EXPECT_NEAR(fidelity(s.tensor(psi), psi), 1.0, 1e-12);
}

TEST(StateVector, TensorPutsTheLeftFactorOnLowQubits) {
  Rng rng(3);
  const StateVector a = StateVector::random(2, rng), b = StateVector::random(1, rng);
  const oracle::Vec want = oracle::kron_vec(as_vec(b), as_vec(a));
  EXPECT_LT((as_vec(a.tensor(b)) - want).norm(), 1e-12);
}

TEST(StateVector, PermutedMovesQubits) {
  const StateVector s = StateVector::basis(3, 0b001);
  const std::vector<std::size_t> order{2, 0, 1};  // new qubit k = old qubit order[k]
  EXPECT_NEAR(std::abs(s.permuted(order)[0b010]), 1.0, 1e-15);
}

TEST(Gates, SingleQubitMatricesMatchOracle) {
  for (GateKind k : {GateKind::kH, GateKind::kS, GateKind::kT, GateKind::kX, GateKind::kY, GateKind::kZ})
    EXPECT_LT((single_qubit_matrix(k) - oracle_single(k)).norm(), 1e-12) << gate_name(k);
  for (int a = 0; a < 8; ++a)
    EXPECT_LT((rz_matrix(Angle8(a)) - oracle::Rz(a)).norm(), 1e-12) << a;
}

TEST(Gates, ApplyMatchesOracleOnRandomStates) {
  Rng rng(11);
  const std::size_t n = 4;
  for (int trial = 0; trial < 200; ++trial) {
    StateVector s = StateVector::random(n, rng);
    const oracle::Vec before = as_vec(s);
    const auto kind = static_cast<GateKind>(rng.below(9));
    const std::size_t a = rng.below(n);
    std::size_t b = rng.below(n - 1);
    if (b >= a) ++b;
    const Angle8 ang = rng.angle();
    oracle::Mat u;
    Gate g{kind, {a, b}, ang};
    if (kind == GateKind::kCZ) {
      u = oracle::cz(n, a, b);
    } else if (kind == GateKind::kCNOT) {
      u = oracle::cnot(n, a, b);
    } else {
      u = oracle::on(n, a, oracle_single(kind, ang.k()));
      g.targets[1] = 0;
    }
    apply(s, g);
    EXPECT_LT((as_vec(s) - u * before).norm(), 1e-10) << gate_name(kind);
  }
}

TEST(Gates, NamesRoundTripAndRejectLowercase) {
  for (int k = 0; k < 9; ++k) {
    const auto kind = static_cast<GateKind>(k);
    EXPECT_EQ(parse_gate_kind(gate_name(kind)), kind);
  }
  EXPECT_THROW(parse_gate_kind("h"), InvalidArgument);
  EXPECT_TRUE(is_clifford(GateKind::kCNOT));
  EXPECT_FALSE(is_clifford(GateKind::kT));
}

TEST(Measure, BornProbabilitiesMatchOracle) {
  Rng rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    const StateVector s = StateVector::random(3, rng);
    const std::size_t q = rng.below(3);
    const Angle8 d = rng.angle();
    const double p1 = oracle::prob_xy_one(as_vec(s), 3, q, d.radians());
    EXPECT_NEAR(probability_xy_zero(s, q, d), 1 - p1, 1e-12);
  }
}

TEST(Measure, SampledFrequenciesFollowBorn) {
  Rng rng(19);
  const StateVector psi = StateVector::from_amplitudes({std::sqrt(0.3), std::sqrt(0.7)});
  int ones = 0;
  const int n = 20000;
  for (int i = 0; i < n; ++i) {
    StateVector s = psi;
    ones += measure_z(s, 0, rng).bit;
  }
  EXPECT_NEAR(ones / static_cast<double>(n), 0.7, 0.015);
}

TEST(Measure, CollapseLeavesEigenstateAndTracksBranchWeight) {
  StateVector s = StateVector::basis(2, 0);
  OutcomeSource src = OutcomeSource::forced({1, 0});
  EXPECT_EQ(measure_xy(s, 0, Angle8(0), src).bit, 1);
  EXPECT_EQ(measure_z(s, 1, src).bit, 0);
  EXPECT_NEAR(src.branch_probability(), 0.5, 1e-12);
  // |-> on qubit 0, |0> on qubit 1.
  EXPECT_NEAR(s[0b00].real(), 1 / std::sqrt(2.0), 1e-12);
  EXPECT_NEAR(s[0b01].real(), -1 / std::sqrt(2.0), 1e-12);
}

TEST(Measure, ForcingAnImpossibleBranchThrows) {
  StateVector s = StateVector::basis(1, 0);
  OutcomeSource src = OutcomeSource::forced({1});
  EXPECT_THROW(measure_z(s, 0, src), ImpossibleBranch);
  StateVector t = StateVector::plus(1);
  OutcomeSource empty = OutcomeSource::forced({});
  EXPECT_THROW(measure_z(t, 0, empty), InvalidArgument);
}

TEST(Measure, PauliExpectationOfBellPair) {
  StateVector s = StateVector::basis(2, 0);
  apply(s, Gate::h(0));
  apply(s, Gate::cnot(0, 1));
  EXPECT_NEAR(expectation(s, PauliString{{{0, Pauli::kX}, {1, Pauli::kX}}}), 1.0, 1e-12);
  EXPECT_NEAR(expectation(s, PauliString{{{0, Pauli::kZ}, {1, Pauli::kZ}}}), 1.0, 1e-12);
  EXPECT_NEAR(expectation(s, PauliString{{{0, Pauli::kY}, {1, Pauli::kY}}}), -1.0, 1e-12);
  EXPECT_NEAR(expectation(s, PauliString{{{0, Pauli::kZ}}}), 0.0, 1e-12);
}

TEST(DensityMatrix, InvariantsAndMetrics) {
  Rng rng(23);
  const StateVector a = StateVector::random(2, rng), b = StateVector::random(2, rng);
  const DensityMatrix ra = DensityMatrix::pure(a), rb = DensityMatrix::pure(b);
  EXPECT_NEAR(ra.purity(), 1.0, 1e-12);
  EXPECT_NEAR(DensityMatrix::maximally_mixed(2).purity(), 0.25, 1e-12);
  // Pure states: D = sqrt(1 - F).
  EXPECT_NEAR(trace_distance(ra, rb), std::sqrt(1 - fidelity(a, b)), 1e-9);
  EXPECT_NEAR(trace_distance(ra, ra), 0.0, 1e-12);
  Eigen::MatrixXcd bad = Eigen::MatrixXcd::Identity(2, 2);
  EXPECT_THROW(DensityMatrix{bad}, InvalidArgument);
  bad(0, 0) = 1.5;
  bad(1, 1) = -0.5;
  EXPECT_THROW(DensityMatrix{bad}, InvalidArgument);
}

TEST(DensityMatrix, ReducedStateOfBellPairIsMixed) {
  StateVector s = StateVector::basis(2, 0);
  apply(s, Gate::h(0));
  apply(s, Gate::cnot(0, 1));
  const std::vector<std::size_t> keep{1};
  const DensityMatrix r = reduced_density(s, keep);
  EXPECT_NEAR(trace_distance(r, DensityMatrix::maximally_mixed(1)), 0.0, 1e-12);
}

TEST(DensityMatrix, MixOfBasisStatesIsDiagonal) {
  const std::vector<MixtureTerm> terms{{0.25, StateVector::basis(1, 0)}, {0.75, StateVector::basis(1, 1)}};
  const DensityMatrix m = mix(terms);
  EXPECT_NEAR(m.matrix()(1, 1).real(), 0.75, 1e-12);
  EXPECT_NEAR(std::abs(m.matrix()(0, 1)), 0.0, 1e-12);
  const std::vector<MixtureTerm> bad{{0.5, StateVector::basis(1, 0)}};
  EXPECT_THROW(mix(bad), InvalidArgument);
}

TEST(QubitRegister, MeasuredQubitsLeaveAndExtractReorders) {
  QubitRegister reg;
  const QubitId a = reg.add(StateVector::basis(1, 1));
  const QubitId b = reg.add(StateVector::plus(1));
  const QubitId c = reg.add(StateVector::basis(1, 0));
  OutcomeSource src = OutcomeSource::forced({0});
  reg.measure_xy(b, Angle8(0), src);
  EXPECT_EQ(reg.size(), 2u);
  EXPECT_THROW(reg.extract({a}), InvalidArgument);
  const StateVector out = reg.extract({c, a});
  EXPECT_NEAR(std::abs(out[0b10]), 1.0, 1e-12);
  EXPECT_THROW(reg.position(b), InvalidArgument);
}

TEST(QubitRegister, EmptyBlockAndEmptyExtract) {
  QubitRegister reg;
  EXPECT_TRUE(reg.add_block(StateVector(0)).empty());
  EXPECT_EQ(reg.extract({}).qubits(), 0u);
}

}  // namespace
}  // namespace bqc
