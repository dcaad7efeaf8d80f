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

// Reference computations for tests, written against plain Eigen so they share
// no code with the library paths they check.

#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

#include <Eigen/Dense>

namespace oracle {

using cplx = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

inline const double kPi = std::acos(-1.0);

inline Mat I2() { return Mat::Identity(2, 2); }
inline Mat X() {
  Mat m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}
inline Mat Y() {
  Mat m(2, 2);
  m << 0, cplx(0, -1), cplx(0, 1), 0;
  return m;
}
inline Mat Z() {
  Mat m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}
inline Mat H() {
  Mat m(2, 2);
  m << 1, 1, 1, -1;
  return m / std::sqrt(2.0);
}
inline Mat S() {
  Mat m(2, 2);
  m << 1, 0, 0, cplx(0, 1);
  return m;
}
inline Mat T() {
  Mat m(2, 2);
  m << 1, 0, 0, std::polar(1.0, kPi / 4);
  return m;
}
inline Mat Rz(int k) {
  Mat m(2, 2);
  m << 1, 0, 0, std::polar(1.0, kPi * k / 4);
  return m;
}

// Qubit q is bit q of the basis index, so the highest qubit is the leftmost
// Kronecker factor.
inline Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

// op acting on qubit q of n.
inline Mat on(std::size_t n, std::size_t q, const Mat& op) {
  Mat out = Mat::Identity(1, 1);
  for (std::size_t k = n; k-- > 0;) out = kron(out, k == q ? op : I2());
  return out;
}

inline Mat cz(std::size_t n, std::size_t a, std::size_t b) {
  const std::size_t dim = std::size_t{1} << n;
  Mat m = Mat::Identity(dim, dim);
  for (std::size_t i = 0; i < dim; ++i)
    if (((i >> a) & 1) && ((i >> b) & 1)) m(i, i) = -1;
  return m;
}

inline Mat cnot(std::size_t n, std::size_t c, std::size_t t) {
  const std::size_t dim = std::size_t{1} << n;
  Mat m = Mat::Zero(dim, dim);
  for (std::size_t i = 0; i < dim; ++i) m((i >> c) & 1 ? i ^ (std::size_t{1} << t) : i, i) = 1;
  return m;
}

// X^x Z^z on each qubit.
inline Mat pad(const std::vector<int>& x, const std::vector<int>& z) {
  const std::size_t n = x.size();
  Mat out = Mat::Identity(std::size_t{1} << n, std::size_t{1} << n);
  for (std::size_t q = 0; q < n; ++q) {
    if (z[q]) out = on(n, q, Z()) * out;
    if (x[q]) out = on(n, q, X()) * out;
  }
  return out;
}

inline bool same_up_to_phase(const Mat& a, const Mat& b, double tol = 1e-9) {
  const cplx overlap = (a.adjoint() * b).trace();
  return std::abs(std::abs(overlap) - static_cast<double>(a.rows())) < tol &&
         std::abs(a.squaredNorm() - static_cast<double>(a.rows())) < tol;
}

// The (x', z') with U X^x Z^z U^dag = phase * X^x' Z^z', found by search over
// all Paulis. Returns false if none matches.
inline bool conjugated_key(const Mat& u, const std::vector<int>& x, const std::vector<int>& z, std::vector<int>& x_out,
                           std::vector<int>& z_out) {
  const std::size_t n = x.size();
  const Mat target = u * pad(x, z) * u.adjoint();
  for (std::size_t idx = 0; idx < (std::size_t{1} << (2 * n)); ++idx) {
    std::vector<int> xs(n), zs(n);
    for (std::size_t q = 0; q < n; ++q) {
      xs[q] = static_cast<int>((idx >> (2 * q)) & 1);
      zs[q] = static_cast<int>((idx >> (2 * q + 1)) & 1);
    }
    if (same_up_to_phase(pad(xs, zs), target)) {
      x_out = xs;
      z_out = zs;
      return true;
    }
  }
  return false;
}

inline Vec plus_theta(int r, int theta_k) {
  Vec v(2);
  v << 1, (r ? -1.0 : 1.0) * std::polar(1.0, kPi * theta_k / 4);
  return v / std::sqrt(2.0);
}

inline Vec basis1(int bit) {
  Vec v = Vec::Zero(2);
  v(bit) = 1;
  return v;
}

inline Vec kron_vec(const Vec& hi, const Vec& lo) {
  Vec out(hi.size() * lo.size());
  for (Eigen::Index i = 0; i < hi.size(); ++i) out.segment(i * lo.size(), lo.size()) = hi(i) * lo;
  return out;
}

// Probability that measuring qubit q of psi in the {|+_d>, |-_d>} basis
// (|+_d> = (|0> + e^{i d}|1>)/sqrt2) yields bit 1.
inline double prob_xy_one(const Vec& psi, std::size_t n, std::size_t q, double d) {
  Mat proj(2, 2);
  Vec minus(2);
  minus << 1, -std::polar(1.0, d);
  minus /= std::sqrt(2.0);
  proj = minus * minus.adjoint();
  const Vec after = on(n, q, proj) * psi;
  return after.squaredNorm();
}

// Detection probability of a uniformly random X/Y/Z on a uniformly random
// qubit, for a single row of `cols` qubits containing one trap. The trap sits
// uniformly at any column but the last, every other qubit is a dummy |d>
// with uniform d, the trap is |+> rotated by a uniform theta and flipped by a
// uniform r, and the server measures the trap at -theta after the CZ chain
// and the Pauli. Exhaustive over every choice.
inline double single_row_trap_detection(std::size_t cols) {
  const Mat paulis[3] = {X(), Y(), Z()};
  double total = 0;
  std::size_t cases = 0;
  for (std::size_t trap = 0; trap + 1 < cols; ++trap) {
    const std::size_t dummies = cols - 1;
    for (std::size_t dbits = 0; dbits < (std::size_t{1} << dummies); ++dbits) {
      for (int r = 0; r < 2; ++r) {
        for (int th = 0; th < 8; ++th) {
          Vec psi = Vec::Ones(1);
          int parity = r;
          std::size_t di = 0;
          for (std::size_t c = cols; c-- > 0;) {
            Vec q;
            if (c == trap) {
              q = plus_theta(r, -th);
            } else {
              const int d = static_cast<int>((dbits >> di++) & 1);
              if (c + 1 == trap || c == trap + 1) parity ^= d;
              q = basis1(d);
            }
            psi = kron_vec(psi, q);
          }
          for (std::size_t c = 0; c + 1 < cols; ++c) psi = cz(cols, c, c + 1) * psi;
          for (std::size_t target = 0; target < cols; ++target) {
            for (const Mat& p : paulis) {
              const Vec hit = on(cols, target, p) * psi;
              const double p1 = prob_xy_one(hit, cols, trap, -kPi * th / 4);
              total += parity ? 1 - p1 : p1;
              ++cases;
            }
          }
        }
      }
    }
  }
  return total / static_cast<double>(cases);
}

// Probability that the K_v = X_v prod Z_w test fails (parity -1) on the
// product state |+>^n.
inline double product_state_kv_failure(std::size_t n, std::size_t v, const std::vector<std::size_t>& neighbours) {
  Mat k = on(n, v, X());
  for (std::size_t w : neighbours) k = on(n, w, Z()) * k;
  Vec plus = Vec::Ones(std::size_t{1} << n) / std::sqrt(static_cast<double>(std::size_t{1} << n));
  const double expectation = (plus.adjoint() * k * plus)(0).real();
  return (1 - expectation) / 2;
}

}  // namespace oracle
