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

#include "bqc/quantum/qubit_register.hpp"

#include <algorithm>
#include <string>

#include "bqc/errors.hpp"

namespace bqc {

bool QubitRegister::contains(QubitId id) const {
  return std::find(ids_.begin(), ids_.end(), id) != ids_.end();
}

std::size_t QubitRegister::position(QubitId id) const {
  const auto it = std::find(ids_.begin(), ids_.end(), id);
  if (it == ids_.end()) throw InvalidArgument("qubit id " + std::to_string(id.value) + " not in register");
  return static_cast<std::size_t>(it - ids_.begin());
}

QubitId QubitRegister::add(const StateVector& single) {
  if (single.qubits() != 1) throw InvalidArgument("QubitRegister::add expects a single-qubit state");
  return add_block(single).front();
}

std::vector<QubitId> QubitRegister::add_block(const StateVector& block) {
  if (block.qubits() == 0) return {};
  check_qubit_count(ids_.size() + block.qubits());
  state_ = state_ ? state_->tensor(block) : block;
  std::vector<QubitId> out;
  for (std::size_t i = 0; i < block.qubits(); ++i) {
    out.push_back(QubitId{next_id_++});
    ids_.push_back(out.back());
  }
  return out;
}

void QubitRegister::apply(GateKind kind, QubitId a, std::optional<QubitId> b, Angle8 angle) {
  Gate g{kind, {position(a), 0}, angle};
  if (gate_arity(kind) == 2) {
    if (!b) throw InvalidArgument("two-qubit gate needs a second qubit");
    g.targets[1] = position(*b);
  }
  bqc::apply(*state_, g);
}

void QubitRegister::apply_matrix(QubitId q, const Mat2& u) { apply_single(*state_, position(q), u); }

void QubitRegister::apply_pauli(QubitId q, Pauli p) { bqc::apply_pauli(*state_, position(q), p); }

void QubitRegister::remove(std::size_t pos, std::pair<cplx, cplx> keep) {
  if (ids_.size() == 1) {
    state_.reset();
  } else {
    state_ = state_->without_qubit(pos, keep.first, keep.second);
  }
  ids_.erase(ids_.begin() + static_cast<std::ptrdiff_t>(pos));
}

Outcome QubitRegister::measure_xy(QubitId q, Angle8 delta, OutcomeSource& src) {
  const std::size_t pos = position(q);
  const Outcome o = bqc::measure_xy(*state_, pos, delta, src);
  remove(pos, xy_eigenstate(delta, o.bit));
  return o;
}

Outcome QubitRegister::measure_z(QubitId q, OutcomeSource& src) {
  const std::size_t pos = position(q);
  const Outcome o = bqc::measure_z(*state_, pos, src);
  remove(pos, z_eigenstate(o.bit));
  return o;
}

StateVector QubitRegister::extract(const std::vector<QubitId>& order) const {
  if (order.size() != ids_.size()) {
    throw InvalidArgument("extract: " + std::to_string(ids_.size() - std::min(ids_.size(), order.size())) +
                          " other qubits still live in the register");
  }
  if (ids_.empty()) return StateVector(0);
  std::vector<std::size_t> perm;
  for (auto id : order) perm.push_back(position(id));
  return state_->permuted(perm);
}

}  // namespace bqc
