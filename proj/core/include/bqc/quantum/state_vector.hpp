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

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "bqc/quantum/angle.hpp"

namespace bqc {

using cplx = std::complex<double>;

/// Largest register the dense engine accepts.
inline constexpr std::size_t kMaxQubits = 18;

/// Normalized dense state of n qubits. Qubit q is bit q of the basis index,
/// so qubit 0 is the least significant.
class StateVector {
 public:
  /// |0...0> on n qubits.
  explicit StateVector(std::size_t n);

  /// Takes ownership of amplitudes; the length must be 2^n and the norm must
  /// be 1 within 1e-10. n = 0 is the scalar state of an empty register.
  static StateVector from_amplitudes(std::vector<cplx> amps);
  static StateVector basis(std::size_t n, std::size_t index);
  static StateVector plus(std::size_t n);
  /// Haar-ish random state (normalized complex Gaussian vector).
  template <class RngT>
  static StateVector random(std::size_t n, RngT& rng) {
    std::vector<cplx> a(std::size_t{1} << n);
    for (auto& x : a) x = cplx(rng.normal(), rng.normal());
    return normalized(std::move(a));
  }

  std::size_t qubits() const { return n_; }
  std::size_t dimension() const { return amps_.size(); }
  std::span<const cplx> amplitudes() const { return amps_; }
  std::span<cplx> mutable_amplitudes() { return amps_; }
  cplx operator[](std::size_t i) const { return amps_[i]; }

  double norm_squared() const;
  /// Rescales to unit norm; throws InvariantViolation on a zero vector.
  void renormalize();

  /// this (x) other; other's qubits become qubits n..n+m-1.
  StateVector tensor(const StateVector& other) const;

  /// Reorders qubits: new qubit i is old qubit order[i].
  StateVector permuted(std::span<const std::size_t> order) const;

  /// Removes qubit q, which must be in the product state |keep> (given as the
  /// two amplitudes of a normalized single-qubit state). Throws if the overlap
  /// shows q was entangled with the rest.
  StateVector without_qubit(std::size_t q, cplx keep0, cplx keep1) const;

  /// <this|other>.
  cplx inner(const StateVector& other) const;

 private:
  StateVector(std::size_t n, std::vector<cplx> amps) : n_(n), amps_(std::move(amps)) {}
  static StateVector normalized(std::vector<cplx> amps);

  std::size_t n_;
  std::vector<cplx> amps_;
};

/// e^{i a}, exact for the eight angles.
cplx unit_phase(Angle8 a);

/// |<a|b>|^2; equality up to global phase.
double fidelity(const StateVector& a, const StateVector& b);

/// (|0> + (-1)^r e^{i theta} |1>)/sqrt(2).
StateVector prepare_plus_theta(Bit r, Angle8 theta);

void check_qubit_count(std::size_t n);

}  // namespace bqc
