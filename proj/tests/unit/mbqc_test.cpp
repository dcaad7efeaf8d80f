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


#include <gtest/gtest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "bqc/errors.hpp"
#include "bqc/mbqc/cells.hpp"
#include "bqc/mbqc/circuit.hpp"
#include "bqc/mbqc/compiler.hpp"
#include "bqc/mbqc/executor.hpp"
#include "bqc/mbqc/flow.hpp"
#include "bqc/mbqc/graph.hpp"
#include "bqc/mbqc/pattern.hpp"
#include "bqc/mbqc/stabilizer.hpp"
#include "bqc/quantum/random.hpp"
#include "support/oracles.hpp"

namespace bqc {
namespace {

// Edge set written straight from the brick layout: bricks on rows (0,1),
// (2,3), ... start at column 2 mod 8 and span to column 4 mod 8; the
// staggered bricks on rows (1,2), (3,4), ... sit at columns 6 and 8 mod 8.
std::set<Edge> expected_edges(std::size_t rows, std::size_t cols) {
  std::set<Edge> out;
  auto id = [cols](std::size_t r, std::size_t c) { return r * cols + c; };
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c + 1 < cols; ++c) out.insert({id(r, c), id(r, c + 1)});
  for (std::size_t r = 0; r + 1 < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      const std::size_t m = c % 8;
      const bool even_pair = r % 2 == 0 && (m == 2 || m == 4);
      const bool odd_pair = r % 2 == 1 && c > 0 && (m == 6 || m == 0);
      if (even_pair || odd_pair) out.insert({id(r, c), id(r + 1, c)});
    }
  }
  return out;
}

Circuit random_nn_circuit(std::size_t wires, std::size_t gates, Rng& rng) {
  Circuit c{wires, {}};
  for (std::size_t i = 0; i < gates; ++i) {
    const std::size_t q = rng.below(wires);
    switch (rng.below(wires > 1 ? 6 : 4)) {
      case 0: c.gates.push_back(Gate::h(q)); break;
      case 1: c.gates.push_back(Gate::t(q)); break;
      case 2: c.gates.push_back(Gate::s(q)); break;
      case 3: c.gates.push_back(Gate::rz(q, rng.angle())); break;
      case 4: c.gates.push_back(q + 1 < wires ? Gate::cnot(q, q + 1) : Gate::cnot(q, q - 1)); break;
      default: c.gates.push_back(q + 1 < wires ? Gate::cz(q, q + 1) : Gate::cz(q - 1, q)); break;
    }
  }
  return c;
}

TEST(Brickwork, EdgesFollowTheBrickRule) {
  for (std::size_t rows = 1; rows <= 5; ++rows) {
    for (std::size_t cols = 1; cols <= 19; ++cols) {
      const BrickworkGraph g = build_brickwork(rows, cols);
      const auto& e = g.graph().edges();
      EXPECT_EQ(std::set<Edge>(e.begin(), e.end()), expected_edges(rows, cols)) << rows << "x" << cols;
    }
  }
  EXPECT_THROW(build_brickwork(0, 3), InvalidArgument);
}

TEST(Graph, RejectsBadEdges) {
  Graph g(3);
  g.add_edge(0, 1);
  EXPECT_THROW(g.add_edge(1, 0), InvalidArgument);
  EXPECT_THROW(g.add_edge(2, 2), InvalidArgument);
  EXPECT_THROW(g.add_edge(0, 3), InvalidArgument);
}

TEST(GraphState, EveryGeneratorStabilizes) {
  const BrickworkGraph g = build_brickwork(2, 6);
  const StateVector s = graph_state(g.graph());
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    EXPECT_NEAR(expectation(s, stabilizer_generator(g.graph(), v)), 1.0, 1e-12) << v;
  Rng rng(4);
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    StateVector copy = s;
    EXPECT_EQ(stabilizer_check(copy, g.graph(), v, rng).bit, 0);
  }
}

TEST(GraphState, EdgeOrderDoesNotMatter) {
  const BrickworkGraph g = build_brickwork(3, 5);
  std::vector<Edge> order = g.graph().edges();
  std::reverse(order.begin(), order.end());
  EXPECT_NEAR(fidelity(graph_state(g.graph()), graph_state(g.graph(), order)), 1.0, 1e-12);
  order.pop_back();
  EXPECT_THROW(graph_state(g.graph(), order), InvalidArgument);
}

TEST(Flow, AdaptAngleMatchesDefinition) {
  for (int k = 0; k < 8; ++k) {
    for (Bit sx = 0; sx < 2; ++sx) {
      for (Bit sz = 0; sz < 2; ++sz) {
        const int want = (sx ? -k : k) + (sz ? 4 : 0);
        EXPECT_EQ(adapt_angle(Angle8(k), sx, sz), Angle8(want));
      }
    }
  }
}

TEST(Flow, DependenciesComeFromTheLeftAndFromFlowNeighbours) {
  const std::vector<Angle8> angles(2 * 8, Angle8{});
  const MeasurementPattern p = MeasurementPattern::computation(2, 9, angles);
  const auto& g = p.graph();
  for (std::size_t v = 0; v < p.vertex_count(); ++v) {
    const std::size_t c = g.col_of(v);
    if (c == 0) {
      EXPECT_TRUE(p.xdep(v).empty());
    } else {
      ASSERT_EQ(p.xdep(v).size(), 1u);
      EXPECT_EQ(p.xdep(v)[0], v - 1);
    }
    // zdep(v) = {u : u + 1 adjacent to v, u != v}.
    std::set<std::size_t> want;
    for (std::size_t w : g.neighbors(v))
      if (g.col_of(w) > 0 && w - 1 != v) want.insert(w - 1);
    const auto& got = p.zdep(v);
    EXPECT_EQ(std::set<std::size_t>(got.begin(), got.end()), want) << v;
  }
}

TEST(Flow, OrderIsColumnMajorAndSkipsTheLastColumn) {
  const std::vector<Angle8> angles(3 * 4, Angle8{});
  const MeasurementPattern p = MeasurementPattern::computation(3, 5, angles);
  ASSERT_EQ(p.order().size(), 12u);
  for (std::size_t i = 1; i < p.order().size(); ++i) {
    const auto& g = p.graph();
    const std::size_t a = p.order()[i - 1], b = p.order()[i];
    EXPECT_TRUE(g.col_of(a) < g.col_of(b) || (g.col_of(a) == g.col_of(b) && g.row_of(a) < g.row_of(b)));
  }
  EXPECT_THROW(p.order_index(4), InvalidArgument);
}

TEST(Cells, CnotBricksRealizeCnot) {
  const oracle::Mat top_ctrl = oracle::cnot(2, 0, 1), bottom_ctrl = oracle::cnot(2, 1, 0);
  EXPECT_TRUE(oracle::same_up_to_phase(brick_unitary(kCnotTopControl), top_ctrl));
  EXPECT_TRUE(oracle::same_up_to_phase(brick_unitary(kCnotBottomControl), bottom_ctrl));
  const auto found = find_brick_angles(top_ctrl);
  ASSERT_TRUE(found.has_value());
  EXPECT_EQ(*found, kCnotTopControl);
}

TEST(Cells, RowSearchCoversSingleQubitCliffordT) {
  for (const oracle::Mat& u : {oracle::H(), oracle::S(), oracle::T(), oracle::X(), oracle::Z(), oracle::I2()}) {
    const auto a = find_row_angles(u);
    ASSERT_TRUE(a.has_value());
    EXPECT_TRUE(oracle::same_up_to_phase(row_unitary(*a), u));
  }
}

TEST(Cells, ColumnUnitaryIsHadamardAfterRz) {
  for (int k = 0; k < 8; ++k)
    EXPECT_TRUE(oracle::same_up_to_phase(column_unitary(Angle8(k)), oracle::H() * oracle::Rz(-k)));
}

TEST(Circuit, ValidationRejectsNonAdjacentAndOutOfRange) {
  EXPECT_THROW((Circuit{3, {Gate::cnot(0, 2)}}).validate(), InvalidArgument);
  EXPECT_THROW((Circuit{2, {Gate::h(2)}}).validate(), InvalidArgument);
  EXPECT_THROW((Circuit{0, {}}).validate(), InvalidArgument);
  EXPECT_NO_THROW((Circuit{2, {Gate::cz(1, 0)}}).validate());
}

TEST(Circuit, UnitaryMatchesOracleProduct) {
  const Circuit c{2, {Gate::h(0), Gate::cnot(0, 1), Gate::t(1)}};
  const oracle::Mat want = oracle::on(2, 1, oracle::T()) * oracle::cnot(2, 0, 1) * oracle::on(2, 0, oracle::H());
  EXPECT_LT((circuit_unitary(c) - want).norm(), 1e-12);
}

TEST(Compiler, EmptyCircuitIsOneColumn) {
  const MeasurementPattern p = compile_circuit(Circuit{2, {}});
  EXPECT_EQ(p.graph().cols(), 1u);
  EXPECT_EQ(compiled_steps(p), 0u);
}

TEST(Compiler, RandomCircuitsRunWithFidelityOne) {
  Rng rng(2024);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t wires = 1 + rng.below(3);
    const Circuit c = random_nn_circuit(wires, 1 + rng.below(8), rng);
    const MeasurementPattern p = compile_circuit(c);
    if (p.vertex_count() > kMaxQubits) continue;
    EXPECT_EQ(p.graph().cols() % 4, 1u);
    const StateVector want = simulate_circuit(c);
    Rng run_rng = rng.fork(static_cast<std::uint64_t>(trial));
    const PatternRun run = run_pattern(p, run_rng, {ExecutionMode::kStreaming, std::nullopt});
    EXPECT_NEAR(fidelity(run.output, want), 1.0, 1e-9) << "trial " << trial;
  }
}

TEST(Compiler, CorrectOnArbitraryInput) {
  Rng rng(31);
  const Circuit c{2, {Gate::t(0), Gate::cnot(1, 0), Gate::h(1)}};
  const MeasurementPattern p = compile_circuit(c);
  for (int i = 0; i < 5; ++i) {
    const StateVector in = StateVector::random(2, rng);
    const PatternRun run = run_pattern(p, rng, {ExecutionMode::kStreaming, in});
    EXPECT_NEAR(fidelity(run.output, simulate_circuit(c, in)), 1.0, 1e-9);
  }
}

TEST(Executor, StreamingMatchesMonolithicBranchByBranch) {
  Rng rng(8);
  std::vector<Angle8> angles(2 * 4);
  for (auto& a : angles) a = rng.angle();
  const MeasurementPattern p = MeasurementPattern::computation(2, 5, angles);
  for (std::size_t branch = 0; branch < 256; branch += 37) {
    std::vector<Bit> bits(8);
    for (std::size_t i = 0; i < 8; ++i) bits[i] = static_cast<Bit>((branch >> i) & 1);
    OutcomeSource s1 = OutcomeSource::forced(bits), s2 = OutcomeSource::forced(bits);
    const PatternRun mono = run_pattern(p, s1, {ExecutionMode::kMonolithic, std::nullopt});
    const PatternRun stream = run_pattern(p, s2, {ExecutionMode::kStreaming, std::nullopt});
    EXPECT_NEAR(fidelity(mono.output, stream.output), 1.0, 1e-10);
    EXPECT_NEAR(s1.branch_probability(), s2.branch_probability(), 1e-12);
    EXPECT_EQ(mono.peak_qubits, 10u);
    EXPECT_LE(stream.peak_qubits, 3u);
  }
}

TEST(Executor, InputWidthMismatchThrows) {
  const MeasurementPattern p = compile_circuit(Circuit{1, {Gate::h(0)}});
  Rng rng(1);
  EXPECT_THROW(run_pattern(p, rng, {ExecutionMode::kStreaming, StateVector::plus(2)}), InvalidArgument);
}

TEST(Pattern, TrapOnlyPatternHasNoLogicalWidth) {
  const BrickworkGraph g = build_brickwork(1, 3);
  std::vector<VertexSpec> spec{{Role::kDummy, {}, 1}, {Role::kTrap, {}, 0}, {Role::kDummy, {}, 0}};
  const MeasurementPattern p(g, spec);
  EXPECT_EQ(p.logical_width(), 0u);
  EXPECT_EQ(p.traps(), std::vector<std::size_t>{1});
  Rng rng(2);
  const PatternRun run = run_pattern(p, rng);
  EXPECT_EQ(run.output.qubits(), 0u);
}

TEST(Pattern, RejectsMalformedRoles) {
  const BrickworkGraph g = build_brickwork(1, 3);
  // Trap next to a compute vertex.
  EXPECT_THROW(MeasurementPattern(g, {{Role::kCompute, {}, 0}, {Role::kTrap, {}, 0}, {Role::kOutput, {}, 0}}),
               InvalidArgument);
  // Trap in the last column.
  EXPECT_THROW(MeasurementPattern(g, {{Role::kDummy, {}, 0}, {Role::kDummy, {}, 0}, {Role::kTrap, {}, 0}}),
               InvalidArgument);
  // Wrong spec count.
  EXPECT_THROW(MeasurementPattern(g, {{Role::kDummy, {}, 0}}), InvalidArgument);
  EXPECT_THROW(parse_role("nope"), InvalidArgument);
}

}  // namespace
}  // namespace bqc
