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

#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "bqc/quantum/angle.hpp"
#include "bqc/quantum/gates.hpp"
#include "bqc/quantum/random.hpp"
#include "bqc/quantum/state_vector.hpp"

namespace bqc {

/// Measurement result. For XY-plane measurements, bit 0 is the projection onto
/// |+_delta> = (|0> + e^{i delta}|1>)/sqrt(2) and bit 1 onto |-_delta>.
struct Outcome {
  Bit bit = 0;
  double probability = 1.0;
};

/// Decides measurement outcomes: either Born sampling from an Rng, or a fixed
/// list of forced bits (branch enumeration). Forcing an outcome whose Born
/// probability is below kForcedMinProbability throws InvalidArgument.
class OutcomeSource {
 public:
  static constexpr double kForcedMinProbability = 1e-12;

  static OutcomeSource sampled(Rng& rng) { return OutcomeSource(&rng, {}); }
  static OutcomeSource forced(std::vector<Bit> bits) { return OutcomeSource(nullptr, std::move(bits)); }

  /// Throws ImpossibleBranch when a forced bit has probability below
  /// kForcedMinProbability, InvalidArgument when the forced list runs out.
  Bit draw(double p0);
  std::size_t consumed() const { return cursor_; }
  /// Product of the probabilities of every outcome drawn so far.
  double branch_probability() const { return probability_; }

 private:
  OutcomeSource(Rng* rng, std::vector<Bit> bits) : rng_(rng), forced_(std::move(bits)) {}

  Rng* rng_;
  std::vector<Bit> forced_;
  std::size_t cursor_ = 0;
  double probability_ = 1.0;
};

/// Probability of bit 0 when measuring qubit q at XY angle delta.
double probability_xy_zero(const StateVector& state, std::size_t q, Angle8 delta);
double probability_z_zero(const StateVector& state, std::size_t q);

/// Measures qubit q in the {|+_delta>, |-_delta>} basis, collapsing in place.
/// The measured qubit is left in the corresponding eigenstate.
Outcome measure_xy(StateVector& state, std::size_t q, Angle8 delta, OutcomeSource& src);
Outcome measure_xy(StateVector& state, std::size_t q, Angle8 delta, Rng& rng);

/// Computational-basis measurement, collapsing in place.
Outcome measure_z(StateVector& state, std::size_t q, OutcomeSource& src);
Outcome measure_z(StateVector& state, std::size_t q, Rng& rng);

/// A tensor product of single-qubit Paulis (phase +1).
struct PauliString {
  std::vector<std::pair<std::size_t, Pauli>> factors;
};

/// <psi|P|psi> (real for Hermitian P).
double expectation(const StateVector& state, const PauliString& p);
/// Projective measurement of the observable P; bit 0 is the +1 eigenspace.
Outcome measure_pauli(StateVector& state, const PauliString& p, OutcomeSource& src);

/// The single-qubit state left on a qubit after an XY / Z measurement.
std::pair<cplx, cplx> xy_eigenstate(Angle8 delta, Bit bit);
std::pair<cplx, cplx> z_eigenstate(Bit bit);

}  // namespace bqc
