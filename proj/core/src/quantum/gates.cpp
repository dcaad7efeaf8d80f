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

#include "bqc/quantum/gates.hpp"

#include <cmath>
#include <string>

#include "bqc/errors.hpp"

namespace bqc {
namespace {

struct GateInfo {
  GateKind kind;
  std::string_view name;
  std::size_t arity;
  bool clifford;
};

constexpr GateInfo kGateTable[] = {
    {GateKind::kH, "H", 1, true},    {GateKind::kS, "S", 1, true},   {GateKind::kT, "T", 1, false},
    {GateKind::kX, "X", 1, true},    {GateKind::kY, "Y", 1, true},   {GateKind::kZ, "Z", 1, true},
    {GateKind::kRZ, "RZ", 1, false}, {GateKind::kCZ, "CZ", 2, true}, {GateKind::kCNOT, "CNOT", 2, true},
};

const GateInfo& info(GateKind kind) {
  for (const auto& g : kGateTable) {
    if (g.kind == kind) return g;
  }
  throw InvariantViolation("unknown gate kind");
}

void check_target(const StateVector& s, std::size_t q) {
  if (q >= s.qubits()) {
    throw InvalidArgument("gate target " + std::to_string(q) + " out of range for " +
                          std::to_string(s.qubits()) + "-qubit register");
  }
}

}  // namespace

std::string_view gate_name(GateKind kind) { return info(kind).name; }

GateKind parse_gate_kind(std::string_view name) {
  for (const auto& g : kGateTable) {
    if (g.name == name) return g.kind;
  }
  throw InvalidArgument("unknown gate '" + std::string(name) + "'");
}

std::size_t gate_arity(GateKind kind) { return info(kind).arity; }
bool is_clifford(GateKind kind) { return info(kind).clifford; }

Mat2 rz_matrix(Angle8 a) {
  Mat2 m;
  m << 1, 0, 0, unit_phase(a);
  return m;
}

Mat2 hadamard_matrix() {
  const double h = std::sqrt(0.5);
  Mat2 m;
  m << h, h, h, -h;
  return m;
}

Mat2 pauli_matrix(Pauli p) {
  Mat2 m;
  switch (p) {
    case Pauli::kI: m << 1, 0, 0, 1; break;
    case Pauli::kX: m << 0, 1, 1, 0; break;
    case Pauli::kY: m << 0, cplx(0, -1), cplx(0, 1), 0; break;
    case Pauli::kZ: m << 1, 0, 0, -1; break;
  }
  return m;
}

Mat2 single_qubit_matrix(GateKind kind, Angle8 angle) {
  switch (kind) {
    case GateKind::kH: return hadamard_matrix();
    case GateKind::kS: return rz_matrix(Angle8(2));
    case GateKind::kT: return rz_matrix(Angle8(1));
    case GateKind::kX: return pauli_matrix(Pauli::kX);
    case GateKind::kY: return pauli_matrix(Pauli::kY);
    case GateKind::kZ: return pauli_matrix(Pauli::kZ);
    case GateKind::kRZ: return rz_matrix(angle);
    default: throw InvalidArgument("not a single-qubit gate: " + std::string(gate_name(kind)));
  }
}

Mat4 two_qubit_matrix(GateKind kind) {
  Mat4 m = Mat4::Zero();
  switch (kind) {
    case GateKind::kCZ:
      m.diagonal() << 1, 1, 1, -1;
      return m;
    case GateKind::kCNOT:
      // control = local qubit 0 (low bit): |01> <-> |11> in index form 1 <-> 3.
      m(0, 0) = 1;
      m(2, 2) = 1;
      m(3, 1) = 1;
      m(1, 3) = 1;
      return m;
    default: throw InvalidArgument("not a two-qubit gate: " + std::string(gate_name(kind)));
  }
}

void apply_single(StateVector& state, std::size_t q, const Mat2& u) {
  check_target(state, q);
  auto a = state.mutable_amplitudes();
  const std::size_t bit = std::size_t{1} << q;
  const cplx u00 = u(0, 0), u01 = u(0, 1), u10 = u(1, 0), u11 = u(1, 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i & bit) continue;
    const cplx x0 = a[i], x1 = a[i | bit];
    a[i] = u00 * x0 + u01 * x1;
    a[i | bit] = u10 * x0 + u11 * x1;
  }
}

void apply_two(StateVector& state, std::size_t q0, std::size_t q1, const Mat4& u) {
  check_target(state, q0);
  check_target(state, q1);
  if (q0 == q1) throw InvalidArgument("two-qubit gate targets must be distinct");
  auto a = state.mutable_amplitudes();
  const std::size_t b0 = std::size_t{1} << q0, b1 = std::size_t{1} << q1;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if ((i & b0) || (i & b1)) continue;
    const std::size_t idx[4] = {i, i | b0, i | b1, i | b0 | b1};
    cplx in[4], out[4];
    for (int k = 0; k < 4; ++k) in[k] = a[idx[k]];
    for (int r = 0; r < 4; ++r) {
      out[r] = u(r, 0) * in[0] + u(r, 1) * in[1] + u(r, 2) * in[2] + u(r, 3) * in[3];
    }
    for (int k = 0; k < 4; ++k) a[idx[k]] = out[k];
  }
}

void apply(StateVector& state, const Gate& g) {
  auto a = state.mutable_amplitudes();
  const std::size_t q = g.targets[0];
  check_target(state, q);
  const std::size_t bq = std::size_t{1} << q;
  switch (g.kind) {
    case GateKind::kCZ: {
      const std::size_t r = g.targets[1];
      check_target(state, r);
      if (q == r) throw InvalidArgument("CZ targets must be distinct");
      const std::size_t mask = bq | (std::size_t{1} << r);
      for (std::size_t i = 0; i < a.size(); ++i) {
        if ((i & mask) == mask) a[i] = -a[i];
      }
      return;
    }
    case GateKind::kCNOT: {
      const std::size_t t = g.targets[1];
      check_target(state, t);
      if (q == t) throw InvalidArgument("CNOT control and target must be distinct");
      const std::size_t bt = std::size_t{1} << t;
      for (std::size_t i = 0; i < a.size(); ++i) {
        if ((i & bq) && !(i & bt)) std::swap(a[i], a[i | bt]);
      }
      return;
    }
    case GateKind::kS:
    case GateKind::kT:
    case GateKind::kZ:
    case GateKind::kRZ: {
      const Angle8 ang = g.kind == GateKind::kS   ? Angle8(2)
                         : g.kind == GateKind::kT ? Angle8(1)
                         : g.kind == GateKind::kZ ? Angle8(4)
                                                  : g.angle;
      const cplx ph = unit_phase(ang);
      for (std::size_t i = 0; i < a.size(); ++i) {
        if (i & bq) a[i] *= ph;
      }
      return;
    }
    default:
      apply_single(state, q, single_qubit_matrix(g.kind, g.angle));
  }
}

StateVector apply_gate(StateVector state, const Gate& g) {
  apply(state, g);
  return state;
}

void apply_pauli(StateVector& state, std::size_t q, Pauli p) {
  switch (p) {
    case Pauli::kI: check_target(state, q); return;
    case Pauli::kX: apply(state, Gate::x(q)); return;
    case Pauli::kY: apply(state, Gate::y(q)); return;
    case Pauli::kZ: apply(state, Gate::z(q)); return;
  }
}

bool equal_up_to_phase(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b, double tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  const double overlap = std::abs((a.adjoint() * b).trace());
  return std::abs(overlap - static_cast<double>(a.rows())) < tol;
}

}  // namespace bqc
