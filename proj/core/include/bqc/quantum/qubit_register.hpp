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
#include <cstdint>
#include <optional>
#include <vector>

#include "bqc/quantum/gates.hpp"
#include "bqc/quantum/measure.hpp"
#include "bqc/quantum/state_vector.hpp"

namespace bqc {

/// Stable handle for a qubit held in a QubitRegister.
struct QubitId {
  std::uint64_t value = 0;
  auto operator<=>(const QubitId&) const = default;
};

/// A growable register addressed by stable ids. Measured qubits are removed,
/// which keeps protocol simulations small (streamed execution never holds more
/// than the live frontier).
class QubitRegister {
 public:
  QubitRegister() = default;

  std::size_t size() const { return ids_.size(); }
  bool contains(QubitId id) const;
  std::size_t position(QubitId id) const;
  const std::vector<QubitId>& ids() const { return ids_; }

  /// Appends a single-qubit state (2 amplitudes) or a multi-qubit block; returns new ids.
  QubitId add(const StateVector& single);
  std::vector<QubitId> add_block(const StateVector& block);

  void apply(GateKind kind, QubitId a, std::optional<QubitId> b = std::nullopt, Angle8 angle = {});
  void apply_matrix(QubitId q, const Mat2& u);
  void apply_pauli(QubitId q, Pauli p);

  /// Measures and removes the qubit.
  Outcome measure_xy(QubitId q, Angle8 delta, OutcomeSource& src);
  Outcome measure_z(QubitId q, OutcomeSource& src);

  /// State of the listed qubits in the given order. Every other qubit must
  /// already be gone (throws InvalidArgument otherwise).
  StateVector extract(const std::vector<QubitId>& order) const;

  const std::optional<StateVector>& state() const { return state_; }

 private:
  void remove(std::size_t pos, std::pair<cplx, cplx> keep);

  std::optional<StateVector> state_;
  std::vector<QubitId> ids_;
  std::uint64_t next_id_ = 1;
};

}  // namespace bqc
