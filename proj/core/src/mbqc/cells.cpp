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

#include "bqc/mbqc/cells.hpp"

#include <cmath>
#include <complex>

namespace bqc {

namespace {

Mat4 kron(const Mat2& bottom, const Mat2& top) {
  Mat4 m;
  for (int i1 = 0; i1 < 2; ++i1)
    for (int i0 = 0; i0 < 2; ++i0)
      for (int j1 = 0; j1 < 2; ++j1)
        for (int j0 = 0; j0 < 2; ++j0) m(2 * i1 + i0, 2 * j1 + j0) = bottom(i1, j1) * top(i0, j0);
  return m;
}

Mat4 cz() { return two_qubit_matrix(GateKind::kCZ); }

// pair_ops()[8 * a + b] = col(b) col(a).
const std::array<Mat2, 64>& pair_ops() {
  static const std::array<Mat2, 64> ops = [] {
    std::array<Mat2, 64> out;
    for (int a = 0; a < 8; ++a)
      for (int b = 0; b < 8; ++b) out[8 * a + b] = column_unitary(Angle8(b)) * column_unitary(Angle8(a));
    return out;
  }();
  return ops;
}

// Index of the pair op proportional to m (which may carry any nonzero scale).
std::optional<int> match_pair(const Mat2& m) {
  const double norm = m.norm();
  if (norm < 1e-9) return std::nullopt;
  const auto& ops = pair_ops();
  for (int i = 0; i < 64; ++i) {
    // Cauchy-Schwarz is tight iff proportional; pair ops have Frobenius norm sqrt(2).
    if (std::abs((ops[i].adjoint() * m).trace()) > norm * std::sqrt(2.0) * (1 - 1e-9)) return i;
  }
  return std::nullopt;
}

}  // namespace

Mat2 column_unitary(Angle8 k) { return hadamard_matrix() * rz_matrix(-k); }

Mat2 row_unitary(const RowAngles& a) {
  return column_unitary(a[3]) * column_unitary(a[2]) * column_unitary(a[1]) * column_unitary(a[0]);
}

Mat4 brick_unitary(const BrickAngles& a) {
  Mat2 t1 = column_unitary(a.top[1]) * column_unitary(a.top[0]);
  Mat2 b1 = column_unitary(a.bottom[1]) * column_unitary(a.bottom[0]);
  Mat2 t2 = column_unitary(a.top[3]) * column_unitary(a.top[2]);
  Mat2 b2 = column_unitary(a.bottom[3]) * column_unitary(a.bottom[2]);
  return cz() * kron(b2, t2) * cz() * kron(b1, t1);
}

std::optional<BrickAngles> find_brick_angles(const Mat4& target) {
  const auto& ops = pair_ops();
  const Mat4 z = cz();
  for (int top2 = 0; top2 < 64; ++top2) {
    for (int bot2 = 0; bot2 < 64; ++bot2) {
      // target = CZ L2 CZ L1  =>  L1 = CZ L2^dag CZ target.
      const Mat4 k = z * kron(ops[bot2], ops[top2]).adjoint() * z * target;
      // Factor k = B (x) A through its largest entry.
      Eigen::Index bi = 0, bj = 0;
      k.cwiseAbs().maxCoeff(&bi, &bj);
      const int i1 = static_cast<int>(bi) / 2, i0 = static_cast<int>(bi) % 2;
      const int j1 = static_cast<int>(bj) / 2, j0 = static_cast<int>(bj) % 2;
      Mat2 a, b;
      for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y) {
          a(x, y) = k(2 * i1 + x, 2 * j1 + y);
          b(x, y) = k(2 * x + i0, 2 * y + j0);
        }
      auto top1 = match_pair(a);
      if (!top1) continue;
      auto bot1 = match_pair(b);
      if (!bot1) continue;
      if (!equal_up_to_phase(kron(ops[*bot1], ops[*top1]), k)) continue;
      BrickAngles out;
      out.top = {Angle8(*top1 / 8), Angle8(*top1 % 8), Angle8(top2 / 8), Angle8(top2 % 8)};
      out.bottom = {Angle8(*bot1 / 8), Angle8(*bot1 % 8), Angle8(bot2 / 8), Angle8(bot2 % 8)};
      return out;
    }
  }
  return std::nullopt;
}

std::optional<RowAngles> find_row_angles(const Mat2& target) {
  const auto& ops = pair_ops();
  for (int second = 0; second < 64; ++second) {
    auto first = match_pair(ops[second].adjoint() * target);
    if (!first) continue;
    return RowAngles{Angle8(*first / 8), Angle8(*first % 8), Angle8(second / 8), Angle8(second % 8)};
  }
  return std::nullopt;
}

}  // namespace bqc
