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

#include "bqc/quantum/measure.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "bqc/errors.hpp"

namespace bqc {
namespace {

void check_qubit(const StateVector& s, std::size_t q) {
  if (q >= s.qubits()) {
    throw InvalidArgument("measured qubit " + std::to_string(q) + " out of range");
  }
}

}  // namespace

Bit OutcomeSource::draw(double p0) {
  if (rng_ != nullptr) {
    ++cursor_;
    const Bit b = rng_->uniform() < p0 ? Bit{0} : Bit{1};
    probability_ *= b ? 1.0 - p0 : p0;
    return b;
  }
  if (cursor_ >= forced_.size()) throw InvalidArgument("forced outcome list exhausted");
  const Bit b = forced_[cursor_++];
  const double p = b ? 1.0 - p0 : p0;
  if (p < kForcedMinProbability) {
    throw ImpossibleBranch("forced outcome " + std::to_string(b) + " has probability " + std::to_string(p));
  }
  probability_ *= p;
  return b;
}

std::pair<cplx, cplx> xy_eigenstate(Angle8 delta, Bit bit) {
  const double h = std::sqrt(0.5);
  return {h, h * unit_phase(delta) * (bit ? -1.0 : 1.0)};
}

std::pair<cplx, cplx> z_eigenstate(Bit bit) {
  return bit ? std::pair<cplx, cplx>{0.0, 1.0} : std::pair<cplx, cplx>{1.0, 0.0};
}

double probability_xy_zero(const StateVector& state, std::size_t q, Angle8 delta) {
  check_qubit(state, q);
  const auto a = state.amplitudes();
  const std::size_t bit = std::size_t{1} << q;
  const cplx conj_phase = std::conj(unit_phase(delta));
  double p0 = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i & bit) continue;
    p0 += std::norm(a[i] + conj_phase * a[i | bit]);
  }
  return 0.5 * p0;
}

double probability_z_zero(const StateVector& state, std::size_t q) {
  check_qubit(state, q);
  const auto a = state.amplitudes();
  const std::size_t bit = std::size_t{1} << q;
  double p0 = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!(i & bit)) p0 += std::norm(a[i]);
  }
  return p0;
}

Outcome measure_xy(StateVector& state, std::size_t q, Angle8 delta, OutcomeSource& src) {
  const double p0 = probability_xy_zero(state, q, delta);
  const Bit b = src.draw(p0);
  const double p = b ? 1.0 - p0 : p0;
  // Project onto |e> = (|0> + s e^{i delta}|1>)/sqrt2: new amplitudes are
  // e_x * <e|psi>_rest.
  const auto [e0, e1] = xy_eigenstate(delta, b);
  auto a = state.mutable_amplitudes();
  const std::size_t bit = std::size_t{1} << q;
  const double inv = 1.0 / std::sqrt(p);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i & bit) continue;
    const cplx c = (std::conj(e0) * a[i] + std::conj(e1) * a[i | bit]) * inv;
    a[i] = e0 * c;
    a[i | bit] = e1 * c;
  }
  return {b, p};
}

Outcome measure_xy(StateVector& state, std::size_t q, Angle8 delta, Rng& rng) {
  auto src = OutcomeSource::sampled(rng);
  return measure_xy(state, q, delta, src);
}

Outcome measure_z(StateVector& state, std::size_t q, OutcomeSource& src) {
  const double p0 = probability_z_zero(state, q);
  const Bit b = src.draw(p0);
  const double p = b ? 1.0 - p0 : p0;
  auto a = state.mutable_amplitudes();
  const std::size_t bit = std::size_t{1} << q;
  const double inv = 1.0 / std::sqrt(p);
  for (std::size_t i = 0; i < a.size(); ++i) {
    const bool one = (i & bit) != 0;
    a[i] = (one == (b == 1)) ? a[i] * inv : cplx{};
  }
  return {b, p};
}

Outcome measure_z(StateVector& state, std::size_t q, Rng& rng) {
  auto src = OutcomeSource::sampled(rng);
  return measure_z(state, q, src);
}

namespace {

StateVector apply_string(StateVector s, const PauliString& p) {
  for (const auto& [q, pauli] : p.factors) apply_pauli(s, q, pauli);
  return s;
}

}  // namespace

double expectation(const StateVector& state, const PauliString& p) {
  return state.inner(apply_string(state, p)).real();
}

Outcome measure_pauli(StateVector& state, const PauliString& p, OutcomeSource& src) {
  const StateVector ps = apply_string(state, p);
  const double ev = state.inner(ps).real();
  const double p0 = std::clamp(0.5 * (1.0 + ev), 0.0, 1.0);
  const Bit b = src.draw(p0);
  const double prob = b ? 1.0 - p0 : p0;
  const double sign = b ? -1.0 : 1.0;
  auto a = state.mutable_amplitudes();
  const auto pa = ps.amplitudes();
  const double inv = 1.0 / std::sqrt(prob);
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = 0.5 * (a[i] + sign * pa[i]) * inv;
  return {b, prob};
}

}  // namespace bqc
