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
#include <span>
#include <utility>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "bqc/quantum/state_vector.hpp"

namespace bqc {

/// Density matrices are capped separately from state vectors.
inline constexpr std::size_t kMaxDensityQubits = 10;

/// Hermitian, unit-trace, positive semidefinite matrix on n qubits.
class DensityMatrix {
 public:
  /// Validates the invariants (Hermitian 1e-10, trace 1e-10, min eigenvalue >= -1e-9).
  explicit DensityMatrix(Eigen::MatrixXcd m);

  static DensityMatrix pure(const StateVector& psi);
  static DensityMatrix maximally_mixed(std::size_t n);

  std::size_t qubits() const { return n_; }
  std::size_t dimension() const { return static_cast<std::size_t>(m_.rows()); }
  const Eigen::MatrixXcd& matrix() const { return m_; }

  double purity() const;
  /// <psi|rho|psi>.
  double fidelity(const StateVector& psi) const;

  DensityMatrix tensor(const DensityMatrix& other) const;

 private:
  std::size_t n_;
  Eigen::MatrixXcd m_;
};

/// Partial trace keeping the listed qubits; result qubit i is keep[i].
DensityMatrix reduced_density(const StateVector& state, std::span<const std::size_t> keep);

using MixtureTerm = std::pair<double, std::variant<StateVector, DensityMatrix>>;
/// Convex combination; weights must be >= 0 and sum to 1 within 1e-10.
DensityMatrix mix(std::span<const MixtureTerm> terms);

/// (1/2) * sum |eig(a - b)|.
double trace_distance(const DensityMatrix& a, const DensityMatrix& b);

/// Trace norm of a Hermitian matrix.
double trace_norm_hermitian(const Eigen::MatrixXcd& h);

}  // namespace bqc
