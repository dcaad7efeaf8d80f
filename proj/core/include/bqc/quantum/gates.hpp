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

#include <array>
#include <cstddef>
#include <string>
#include <string_view>

#include <Eigen/Dense>

#include "bqc/quantum/angle.hpp"
#include "bqc/quantum/state_vector.hpp"

namespace bqc {

enum class GateKind : std::uint8_t { kH, kS, kT, kX, kY, kZ, kRZ, kCZ, kCNOT };

std::string_view gate_name(GateKind kind);
/// Inverse of gate_name; throws InvalidArgument on an unknown name.
GateKind parse_gate_kind(std::string_view name);
std::size_t gate_arity(GateKind kind);
bool is_clifford(GateKind kind);

/// One gate on explicit qubit indices. For CNOT, targets[0] is the control.
struct Gate {
  GateKind kind = GateKind::kH;
  std::array<std::size_t, 2> targets{};
  Angle8 angle{};  // RZ only

  static Gate h(std::size_t q) { return {GateKind::kH, {q, 0}, {}}; }
  static Gate s(std::size_t q) { return {GateKind::kS, {q, 0}, {}}; }
  static Gate t(std::size_t q) { return {GateKind::kT, {q, 0}, {}}; }
  static Gate x(std::size_t q) { return {GateKind::kX, {q, 0}, {}}; }
  static Gate y(std::size_t q) { return {GateKind::kY, {q, 0}, {}}; }
  static Gate z(std::size_t q) { return {GateKind::kZ, {q, 0}, {}}; }
  static Gate rz(std::size_t q, Angle8 a) { return {GateKind::kRZ, {q, 0}, a}; }
  static Gate cz(std::size_t a, std::size_t b) { return {GateKind::kCZ, {a, b}, {}}; }
  static Gate cnot(std::size_t c, std::size_t t) { return {GateKind::kCNOT, {c, t}, {}}; }

  std::size_t arity() const { return gate_arity(kind); }
  bool operator==(const Gate&) const = default;
};

using Mat2 = Eigen::Matrix2cd;
using Mat4 = Eigen::Matrix4cd;

/// Rz(a) = diag(1, e^{ia}).
Mat2 rz_matrix(Angle8 a);
Mat2 hadamard_matrix();
/// Matrix of a single-qubit gate kind.
Mat2 single_qubit_matrix(GateKind kind, Angle8 angle = {});
/// 4x4 matrix of a gate acting on (local qubit 0, local qubit 1), index = b0 + 2*b1.
/// For CNOT the control is local qubit 0.
Mat4 two_qubit_matrix(GateKind kind);

/// In-place application. Throws InvalidArgument on invalid/duplicate targets.
void apply(StateVector& state, const Gate& g);
/// Value-returning form.
StateVector apply_gate(StateVector state, const Gate& g);

void apply_single(StateVector& state, std::size_t q, const Mat2& u);
void apply_two(StateVector& state, std::size_t q0, std::size_t q1, const Mat4& u);

/// Single-qubit Pauli labels used by adversaries, keys and stabilizers.
enum class Pauli : std::uint8_t { kI = 0, kX = 1, kY = 2, kZ = 3 };
void apply_pauli(StateVector& state, std::size_t q, Pauli p);
Mat2 pauli_matrix(Pauli p);

/// Global-phase-insensitive equality of unitaries: |tr(a^dag b)| = dim.
bool equal_up_to_phase(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b, double tol = 1e-9);

}  // namespace bqc
