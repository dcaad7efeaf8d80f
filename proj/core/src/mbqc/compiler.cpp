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

#include "bqc/mbqc/compiler.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <string>

#include "bqc/errors.hpp"
#include "bqc/mbqc/cells.hpp"

namespace bqc {

namespace {

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

// A scheduled cell: a brick on rows (top, top + 1) or a single row.
struct Unit {
  bool paired = false;
  Mat4 u4 = Mat4::Identity();
  Mat2 u2 = Mat2::Identity();
  BrickAngles brick{};
  RowAngles row{};
};

class Scheduler {
 public:
  explicit Scheduler(std::size_t wires) : wires_(wires), frontier_(wires, kNone) {}

  void add(const Gate& g) {
    std::size_t lo = g.targets[0], hi = g.targets[0];
    if (g.arity() == 2) {
      lo = std::min(g.targets[0], g.targets[1]);
      hi = std::max(g.targets[0], g.targets[1]);
    }
    std::size_t s0 = kNone;
    for (std::size_t w = lo; w <= hi; ++w)
      if (frontier_[w] != kNone && (s0 == kNone || frontier_[w] > s0)) s0 = frontier_[w];

    if (s0 != kNone && try_place(s0, g, lo, false)) return mark(s0, lo, hi);
    for (std::size_t s = s0 == kNone ? 0 : s0 + 1;; ++s) {
      if (g.arity() == 2 && brick_top(s, lo) != lo) continue;
      const bool fresh = s >= steps_.size() || !steps_[s].count(unit_key(s, lo));
      if (try_place(s, g, lo, fresh)) return mark(s, lo, hi);
      if (fresh) throw InvariantViolation("gate " + std::string(gate_name(g.kind)) + " does not fit a fresh cell");
    }
  }

  MeasurementPattern finish() const {
    const std::size_t cols = 4 * steps_.size() + 1;
    std::vector<Angle8> angles(wires_ * (cols - 1));
    for (std::size_t s = 0; s < steps_.size(); ++s) {
      for (const auto& [key, unit] : steps_[s]) {
        auto put = [&](std::size_t r, const RowAngles& a) {
          for (std::size_t k = 0; k < 4; ++k) angles[r * (cols - 1) + 4 * s + k] = a[k];
        };
        if (unit.paired) {
          put(key, unit.brick.top);
          put(key + 1, unit.brick.bottom);
        } else {
          put(key, unit.row);
        }
      }
    }
    return MeasurementPattern::computation(wires_, cols, angles);
  }

 private:
  // Top row of the brick containing `row` at step s, or kNone when unpaired.
  std::size_t brick_top(std::size_t s, std::size_t row) const {
    const std::size_t family = s % 2;
    std::size_t top = row % 2 == family ? row : (row == 0 ? kNone : row - 1);
    if (top == kNone || top + 1 >= wires_) return kNone;
    return top;
  }

  std::size_t unit_key(std::size_t s, std::size_t row) const {
    std::size_t top = brick_top(s, row);
    return top == kNone ? row : top;
  }

  // Matrix of g on the unit's local qubits (top row = local 0).
  Mat4 local4(const Gate& g, std::size_t top) const {
    Gate local = g;
    local.targets[0] -= top;
    if (g.arity() == 2) local.targets[1] -= top;
    Mat4 m;
    for (std::size_t j = 0; j < 4; ++j) {
      StateVector s = StateVector::basis(2, j);
      apply(s, local);
      for (std::size_t i = 0; i < 4; ++i) m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = s[i];
    }
    return m;
  }

  bool try_place(std::size_t s, const Gate& g, std::size_t lo, bool fresh) {
    const std::size_t top = brick_top(s, lo);
    if (g.arity() == 2 && top != lo) return false;
    const std::size_t key = top == kNone ? lo : top;
    if (s >= steps_.size()) {
      if (!fresh) return false;
      steps_.resize(s + 1);
    }
    auto it = steps_[s].find(key);
    if (it == steps_[s].end() && !fresh) return false;
    Unit unit = it == steps_[s].end() ? Unit{top != kNone} : it->second;
    if (unit.paired) {
      const Mat4 target = local4(g, key) * unit.u4;
      auto a = find_brick_angles(target);
      if (!a) return false;
      unit.u4 = target;
      unit.brick = *a;
    } else {
      const Mat2 target = single_qubit_matrix(g.kind, g.angle) * unit.u2;
      auto a = find_row_angles(target);
      if (!a) return false;
      unit.u2 = target;
      unit.row = *a;
    }
    steps_[s][key] = unit;
    return true;
  }

  void mark(std::size_t s, std::size_t lo, std::size_t hi) {
    for (std::size_t w = lo; w <= hi; ++w) frontier_[w] = s;
  }

  std::size_t wires_;
  std::vector<std::size_t> frontier_;
  std::vector<std::map<std::size_t, Unit>> steps_;
};

}  // namespace

MeasurementPattern compile_circuit(const Circuit& c) {
  c.validate();
  if (c.wires > kMaxQubits) throw CapacityError("circuit has more wires than the engine supports");
  Scheduler sched(c.wires);
  for (const Gate& g : c.gates) {
    if (g.kind == GateKind::kCZ) {
      const std::size_t t = g.targets[1];
      sched.add(Gate::h(t));
      sched.add(Gate::cnot(g.targets[0], t));
      sched.add(Gate::h(t));
    } else {
      sched.add(g);
    }
  }
  return sched.finish();
}

}  // namespace bqc
