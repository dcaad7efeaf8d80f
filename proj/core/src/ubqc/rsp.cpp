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

#include "bqc/ubqc/rsp.hpp"

#include <cmath>

#include "bqc/errors.hpp"

namespace bqc {

StateVector bell_state(BellState b) {
  const double h = std::sqrt(0.5);
  std::vector<cplx> a(4, 0.0);
  switch (b) {
    case BellState::kPhiPlus: a[0] = h, a[3] = h; break;
    case BellState::kPhiMinus: a[0] = h, a[3] = -h; break;
    case BellState::kPsiPlus: a[1] = h, a[2] = h; break;
    case BellState::kPsiMinus: a[1] = h, a[2] = -h; break;
  }
  return StateVector::from_amplitudes(std::move(a));
}

RspResult rsp_measure(const StateVector& pair, Angle8 theta, OutcomeSource& src) {
  if (pair.qubits() != 2) throw InvalidArgument("remote preparation needs a two-qubit pair");
  StateVector s = pair;
  RspResult out;
  out.outcome = measure_xy(s, 0, theta, src);
  const auto [k0, k1] = xy_eigenstate(theta, out.outcome.bit);
  out.remote = s.without_qubit(0, k0, k1);
  return out;
}

RspResult rsp_measure(const StateVector& pair, Angle8 theta, Rng& rng) {
  OutcomeSource src = OutcomeSource::sampled(rng);
  return rsp_measure(pair, theta, src);
}

}  // namespace bqc
