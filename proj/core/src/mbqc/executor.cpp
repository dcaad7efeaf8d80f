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

#include "bqc/mbqc/executor.hpp"

#include <algorithm>
#include <string>

#include "bqc/errors.hpp"
#include "bqc/mbqc/flow.hpp"
#include "bqc/quantum/qubit_register.hpp"

namespace bqc {

namespace {

class Run {
 public:
  Run(const MeasurementPattern& p, const RunOptions& opts)
      : p_(p), ids_(p.vertex_count()), present_(p.vertex_count(), false), measured_(p.vertex_count(), false) {
    if (opts.mode == ExecutionMode::kMonolithic) check_qubit_count(p.vertex_count());
    const std::size_t w = p.logical_width();
    const StateVector input = opts.input ? *opts.input : StateVector::plus(w);
    if (input.qubits() != w)
      throw InvalidArgument("input has " + std::to_string(input.qubits()) + " qubits, pattern expects " +
                            std::to_string(w));
    auto block = reg_.add_block(input);
    for (std::size_t i = 0; i < w; ++i) {
      ids_[p.inputs()[i]] = block[i];
      present_[p.inputs()[i]] = true;
      entangle_new(p.inputs()[i]);
    }
    const auto& g = p.graph();
    for (std::size_t r = 0; r < g.rows(); ++r) insert(g.id(r, 0));
    if (opts.mode == ExecutionMode::kMonolithic)
      for (std::size_t v = 0; v < p.vertex_count(); ++v) insert(v);
    peak_ = reg_.size();
  }

  PatternRun execute(OutcomeSource& src) {
    const StaticFrame frame = p_.static_frame();
    std::vector<Bit> m(p_.vertex_count(), 0);
    for (std::size_t v : p_.order()) {
      for (std::size_t w : p_.graph().neighbors(v)) insert(w);
      peak_ = std::max(peak_, reg_.size());
      Angle8 angle{};
      if (p_.role(v) == Role::kCompute) {
        const FrameParities s = p_.parities(v, m, frame);
        angle = adapt_angle(p_.angle(v), s.x, s.z);
      }
      m[v] = reg_.measure_xy(ids_[v], angle, src).bit;
      measured_[v] = true;
    }

    std::vector<QubitId> out_ids;
    const auto& g = p_.graph();
    for (std::size_t r = 0; r < g.rows(); ++r) {
      const std::size_t v = g.id(r, g.cols() - 1);
      insert(v);
      if (p_.role(v) == Role::kDummy) {
        // Product state |d>; discard without touching the outcome stream.
        OutcomeSource known = OutcomeSource::forced({p_.vertex(v).dummy_bit});
        reg_.measure_z(ids_[v], known);
      }
    }
    for (std::size_t v : p_.outputs()) out_ids.push_back(ids_[v]);

    PatternRun result;
    result.output = reg_.extract(out_ids);
    for (std::size_t i = 0; i < p_.outputs().size(); ++i) {
      const FrameParities s = p_.parities(p_.outputs()[i], m, frame);
      if (s.x) apply_pauli(result.output, i, Pauli::kX);
      if (s.z) apply_pauli(result.output, i, Pauli::kZ);
    }
    result.outcomes = std::move(m);
    result.peak_qubits = peak_;
    return result;
  }

 private:
  void insert(std::size_t v) {
    if (present_[v]) return;
    const VertexSpec& spec = p_.vertex(v);
    ids_[v] = reg_.add(spec.role == Role::kDummy ? StateVector::basis(1, spec.dummy_bit) : StateVector::plus(1));
    present_[v] = true;
    entangle_new(v);
  }

  void entangle_new(std::size_t v) {
    for (std::size_t w : p_.graph().neighbors(v)) {
      if (!present_[w] || w == v) continue;
      if (measured_[w]) throw InvariantViolation("vertex " + std::to_string(w) + " measured before its edges");
      reg_.apply(GateKind::kCZ, ids_[v], ids_[w]);
    }
  }

  const MeasurementPattern& p_;
  QubitRegister reg_;
  std::vector<QubitId> ids_;
  std::vector<bool> present_;
  std::vector<bool> measured_;
  std::size_t peak_ = 0;
};

}  // namespace

PatternRun run_pattern(const MeasurementPattern& p, OutcomeSource& src, const RunOptions& opts) {
  Run run(p, opts);
  return run.execute(src);
}

PatternRun run_pattern(const MeasurementPattern& p, Rng& rng, const RunOptions& opts) {
  OutcomeSource src = OutcomeSource::sampled(rng);
  return run_pattern(p, src, opts);
}

}  // namespace bqc
