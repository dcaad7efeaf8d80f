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

#include "bqc/quantum/state_vector.hpp"

#include <bit>
#include <cmath>
#include <string>

#include "bqc/errors.hpp"

namespace bqc {

void check_qubit_count(std::size_t n) {
  if (n == 0) throw InvalidArgument("register must have at least one qubit");
  if (n > kMaxQubits) {
    throw CapacityError("register of " + std::to_string(n) + " qubits exceeds the engine bound of " +
                        std::to_string(kMaxQubits));
  }
}

StateVector::StateVector(std::size_t n) : n_(n) {
  if (n > 0) check_qubit_count(n);
  amps_.assign(std::size_t{1} << n, cplx{});
  amps_[0] = 1.0;
}

StateVector StateVector::normalized(std::vector<cplx> amps) {
  const std::size_t len = amps.size();
  if (!std::has_single_bit(len)) throw InvalidArgument("amplitude vector length must be a power of two");
  const auto n = static_cast<std::size_t>(std::countr_zero(len));
  if (n > 0) check_qubit_count(n);
  StateVector s(n, std::move(amps));
  s.renormalize();
  return s;
}

StateVector StateVector::from_amplitudes(std::vector<cplx> amps) {
  const std::size_t len = amps.size();
  if (!std::has_single_bit(len)) throw InvalidArgument("amplitude vector length must be a power of two");
  const auto n = static_cast<std::size_t>(std::countr_zero(len));
  if (n > 0) check_qubit_count(n);
  StateVector s(n, std::move(amps));
  if (std::abs(s.norm_squared() - 1.0) > 1e-10) {
    throw InvalidArgument("amplitudes are not normalized");
  }
  return s;
}

StateVector StateVector::basis(std::size_t n, std::size_t index) {
  StateVector s(n);
  if (index >= s.amps_.size()) throw InvalidArgument("basis index out of range");
  s.amps_[0] = 0.0;
  s.amps_[index] = 1.0;
  return s;
}

StateVector StateVector::plus(std::size_t n) {
  StateVector s(n);
  const double a = 1.0 / std::sqrt(static_cast<double>(s.amps_.size()));
  for (auto& x : s.amps_) x = a;
  return s;
}

double StateVector::norm_squared() const {
  double acc = 0.0;
  for (const auto& a : amps_) acc += std::norm(a);
  return acc;
}

void StateVector::renormalize() {
  const double ns = norm_squared();
  if (!(ns > 0.0)) throw InvariantViolation("cannot normalize a zero state");
  const double inv = 1.0 / std::sqrt(ns);
  for (auto& a : amps_) a *= inv;
}

StateVector StateVector::tensor(const StateVector& other) const {
  check_qubit_count(n_ + other.n_);
  std::vector<cplx> out(amps_.size() * other.amps_.size());
  for (std::size_t j = 0; j < other.amps_.size(); ++j) {
    const cplx b = other.amps_[j];
    const std::size_t base = j << n_;
    for (std::size_t i = 0; i < amps_.size(); ++i) out[base + i] = amps_[i] * b;
  }
  return StateVector(n_ + other.n_, std::move(out));
}

StateVector StateVector::permuted(std::span<const std::size_t> order) const {
  if (order.size() != n_) throw InvalidArgument("permutation size mismatch");
  std::vector<bool> seen(n_, false);
  for (auto q : order) {
    if (q >= n_ || seen[q]) throw InvalidArgument("invalid qubit permutation");
    seen[q] = true;
  }
  std::vector<cplx> out(amps_.size());
  for (std::size_t i = 0; i < amps_.size(); ++i) {
    std::size_t old = 0;
    for (std::size_t k = 0; k < n_; ++k) {
      if ((i >> k) & 1U) old |= std::size_t{1} << order[k];
    }
    out[i] = amps_[old];
  }
  return StateVector(n_, std::move(out));
}

StateVector StateVector::without_qubit(std::size_t q, cplx keep0, cplx keep1) const {
  if (q >= n_) throw InvalidArgument("qubit index out of range");
  if (n_ == 1) throw InvalidArgument("cannot remove the last qubit");
  const std::size_t bit = std::size_t{1} << q;
  const std::size_t low = bit - 1;
  std::vector<cplx> out(amps_.size() / 2);
  for (std::size_t i = 0; i < out.size(); ++i) {
    const std::size_t i0 = ((i & ~low) << 1) | (i & low);
    out[i] = std::conj(keep0) * amps_[i0] + std::conj(keep1) * amps_[i0 | bit];
  }
  StateVector s(n_ - 1, std::move(out));
  const double ns = s.norm_squared();
  if (std::abs(ns - 1.0) > 1e-9) {
    throw InvalidArgument("qubit is not in the stated product state (overlap " + std::to_string(ns) +
                          ")");
  }
  s.renormalize();
  return s;
}

cplx StateVector::inner(const StateVector& other) const {
  if (other.n_ != n_) throw InvalidArgument("inner product of states with different sizes");
  cplx acc{};
  for (std::size_t i = 0; i < amps_.size(); ++i) acc += std::conj(amps_[i]) * other.amps_[i];
  return acc;
}

cplx unit_phase(Angle8 a) {
  const double h = std::sqrt(0.5);
  static const cplx kTable[8] = {{1, 0}, {h, h}, {0, 1}, {-h, h}, {-1, 0}, {-h, -h}, {0, -1}, {h, -h}};
  return kTable[a.k()];
}

double fidelity(const StateVector& a, const StateVector& b) { return std::norm(a.inner(b)); }

StateVector prepare_plus_theta(Bit r, Angle8 theta) {
  const double s = 1.0 / std::sqrt(2.0);
  const cplx phase = unit_phase(theta) * (r ? -1.0 : 1.0);
  return StateVector::from_amplitudes({s, s * phase});
}

}  // namespace bqc
