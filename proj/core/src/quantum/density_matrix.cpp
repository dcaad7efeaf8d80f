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

#include "bqc/quantum/density_matrix.hpp"

#include <bit>
#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>

#include "bqc/errors.hpp"

namespace bqc {
namespace {

std::size_t qubits_for_dimension(Eigen::Index dim) {
  const auto d = static_cast<std::size_t>(dim);
  if (d < 2 || !std::has_single_bit(d)) throw InvalidArgument("density matrix dimension must be 2^n, n >= 1");
  const auto n = static_cast<std::size_t>(std::countr_zero(d));
  if (n > kMaxDensityQubits) {
    throw CapacityError("density matrix of " + std::to_string(n) + " qubits exceeds bound " +
                        std::to_string(kMaxDensityQubits));
  }
  return n;
}

}  // namespace

DensityMatrix::DensityMatrix(Eigen::MatrixXcd m) : n_(0), m_(std::move(m)) {
  if (m_.rows() != m_.cols()) throw InvalidArgument("density matrix must be square");
  n_ = qubits_for_dimension(m_.rows());
  if ((m_ - m_.adjoint()).cwiseAbs().maxCoeff() > 1e-10) throw InvalidArgument("density matrix is not Hermitian");
  if (std::abs(m_.trace() - cplx(1.0)) > 1e-10) throw InvalidArgument("density matrix trace is not 1");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m_, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -1e-9) throw InvalidArgument("density matrix is not positive semidefinite");
}

DensityMatrix DensityMatrix::pure(const StateVector& psi) {
  if (psi.qubits() > kMaxDensityQubits) throw CapacityError("state too large for a density matrix");
  const auto a = psi.amplitudes();
  Eigen::Map<const Eigen::VectorXcd> v(a.data(), static_cast<Eigen::Index>(a.size()));
  return DensityMatrix(v * v.adjoint());
}

DensityMatrix DensityMatrix::maximally_mixed(std::size_t n) {
  if (n == 0 || n > kMaxDensityQubits) throw CapacityError("maximally mixed state size out of range");
  const auto d = static_cast<Eigen::Index>(std::size_t{1} << n);
  return DensityMatrix(Eigen::MatrixXcd::Identity(d, d) / static_cast<double>(d));
}

double DensityMatrix::purity() const { return (m_ * m_).trace().real(); }

double DensityMatrix::fidelity(const StateVector& psi) const {
  if (psi.dimension() != dimension()) throw InvalidArgument("fidelity: dimension mismatch");
  const auto a = psi.amplitudes();
  Eigen::Map<const Eigen::VectorXcd> v(a.data(), static_cast<Eigen::Index>(a.size()));
  return (v.adjoint() * m_ * v)(0, 0).real();
}

DensityMatrix DensityMatrix::tensor(const DensityMatrix& other) const {
  // Other's qubits are appended as the high bits, matching StateVector::tensor.
  const Eigen::Index da = m_.rows(), db = other.m_.rows();
  Eigen::MatrixXcd out(da * db, da * db);
  for (Eigen::Index i = 0; i < db; ++i) {
    for (Eigen::Index j = 0; j < db; ++j) out.block(i * da, j * da, da, da) = other.m_(i, j) * m_;
  }
  return DensityMatrix(std::move(out));
}

DensityMatrix reduced_density(const StateVector& state, std::span<const std::size_t> keep) {
  if (keep.empty()) throw InvalidArgument("reduced_density: keep set is empty");
  const std::size_t n = state.qubits();
  std::vector<bool> kept(n, false);
  for (auto q : keep) {
    if (q >= n || kept[q]) throw InvalidArgument("reduced_density: invalid keep set");
    kept[q] = true;
  }
  if (keep.size() > kMaxDensityQubits) throw CapacityError("reduced_density: too many kept qubits");
  std::vector<std::size_t> rest;
  for (std::size_t q = 0; q < n; ++q) {
    if (!kept[q]) rest.push_back(q);
  }
  const std::size_t dk = std::size_t{1} << keep.size();
  const std::size_t dr = std::size_t{1} << rest.size();
  auto scatter = [](std::size_t local, std::span<const std::size_t> qs) {
    std::size_t idx = 0;
    for (std::size_t k = 0; k < qs.size(); ++k) {
      if ((local >> k) & 1U) idx |= std::size_t{1} << qs[k];
    }
    return idx;
  };
  std::vector<std::size_t> keep_idx(dk), rest_idx(dr);
  for (std::size_t i = 0; i < dk; ++i) keep_idx[i] = scatter(i, keep);
  for (std::size_t i = 0; i < dr; ++i) rest_idx[i] = scatter(i, rest);

  // psi as a dk x dr matrix; rho = A A^dag.
  const auto a = state.amplitudes();
  Eigen::MatrixXcd amat(static_cast<Eigen::Index>(dk), static_cast<Eigen::Index>(dr));
  for (std::size_t i = 0; i < dk; ++i) {
    for (std::size_t j = 0; j < dr; ++j) {
      amat(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = a[keep_idx[i] | rest_idx[j]];
    }
  }
  Eigen::MatrixXcd rho = amat * amat.adjoint();
  rho = 0.5 * (rho + rho.adjoint()).eval();
  return DensityMatrix(std::move(rho));
}

DensityMatrix mix(std::span<const MixtureTerm> terms) {
  if (terms.empty()) throw InvalidArgument("mix: no terms");
  double total = 0.0;
  Eigen::MatrixXcd acc;
  for (const auto& [w, st] : terms) {
    if (w < 0.0) throw InvalidArgument("mix: negative weight");
    total += w;
    const Eigen::MatrixXcd m = std::visit(
        [](const auto& s) -> Eigen::MatrixXcd {
          if constexpr (std::is_same_v<std::decay_t<decltype(s)>, StateVector>) {
            return DensityMatrix::pure(s).matrix();
          } else {
            return s.matrix();
          }
        },
        st);
    if (acc.size() == 0) {
      acc = w * m;
    } else {
      if (m.rows() != acc.rows()) throw InvalidArgument("mix: dimension mismatch");
      acc += w * m;
    }
  }
  if (std::abs(total - 1.0) > 1e-10) throw InvalidArgument("mix: weights do not sum to 1");
  return DensityMatrix(std::move(acc));
}

double trace_norm_hermitian(const Eigen::MatrixXcd& h) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h, Eigen::EigenvaluesOnly);
  return es.eigenvalues().cwiseAbs().sum();
}

double trace_distance(const DensityMatrix& a, const DensityMatrix& b) {
  if (a.dimension() != b.dimension()) throw InvalidArgument("trace_distance: dimension mismatch");
  return 0.5 * trace_norm_hermitian(a.matrix() - b.matrix());
}

}  // namespace bqc
