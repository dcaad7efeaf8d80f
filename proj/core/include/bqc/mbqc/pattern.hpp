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
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "bqc/mbqc/graph.hpp"
#include "bqc/quantum/angle.hpp"

namespace bqc {

enum class Role : std::uint8_t { kCompute, kDummy, kTrap, kOutput };

std::string_view role_name(Role r);
Role parse_role(std::string_view name);

struct VertexSpec {
  Role role = Role::kCompute;
  Angle8 angle{};  // compute vertices only
  Bit dummy_bit = 0;  // dummy vertices only

  bool operator==(const VertexSpec&) const = default;
};

/// Pauli frame parities accumulated on a vertex: the state there carries X^x Z^z.
struct FrameParities {
  Bit x = 0;
  Bit z = 0;
};

/// Frame contributions known before any measurement (dummy neighbours, input
/// one-time-pad bits), per vertex.
struct StaticFrame {
  std::vector<Bit> x;
  std::vector<Bit> z;
};

/// A measurement pattern on a brickwork graph.
///
/// Rows are either computation rows (compute vertices ending in one output in
/// the last column) or trap-region rows (only dummies and traps). Every vertex
/// outside the last column is measured, column by column, top to bottom; the
/// last column is never measured (computation outputs, or dummies that are
/// simply discarded).
///
/// A pattern angle phi at a vertex means the measurement projects onto
/// |+-_phi>; the logical qubit moves right and picks up X^m H Rz(-phi).
class MeasurementPattern {
 public:
  /// Computes the measurement order and flow dependencies. Throws
  /// InvalidArgument when the roles violate the row structure above, when a
  /// trap has a non-dummy neighbour. A pattern made only of trap rows is
  /// allowed; its logical output is the zero-qubit state.
  MeasurementPattern(BrickworkGraph graph, std::vector<VertexSpec> spec);

  /// All-compute pattern with outputs in the last column; angles row-major
  /// over the first cols-1 columns.
  static MeasurementPattern computation(std::size_t rows, std::size_t cols, std::span<const Angle8> angles);

  const BrickworkGraph& graph() const { return graph_; }
  std::size_t vertex_count() const { return spec_.size(); }
  const VertexSpec& vertex(std::size_t v) const { return spec_.at(v); }
  const std::vector<VertexSpec>& vertices() const { return spec_; }
  Role role(std::size_t v) const { return spec_.at(v).role; }
  Angle8 angle(std::size_t v) const { return spec_.at(v).angle; }

  bool is_measured(std::size_t v) const { return graph_.col_of(v) + 1 < graph_.cols(); }
  const std::vector<std::size_t>& order() const { return order_; }
  /// Position of v in order(); throws for unmeasured vertices.
  std::size_t order_index(std::size_t v) const;

  const std::vector<std::size_t>& xdep(std::size_t v) const { return xdep_.at(v); }
  const std::vector<std::size_t>& zdep(std::size_t v) const { return zdep_.at(v); }

  /// First-column vertices of computation rows, top to bottom.
  const std::vector<std::size_t>& inputs() const { return inputs_; }
  /// Output vertices, top to bottom.
  const std::vector<std::size_t>& outputs() const { return outputs_; }
  std::size_t logical_width() const { return outputs_.size(); }
  std::vector<std::size_t> computation_rows() const;

  std::vector<std::size_t> traps() const;
  std::vector<std::size_t> dummies() const;

  /// Static frame from dummy neighbours: z[v] = XOR of neighbouring dummy bits.
  StaticFrame static_frame() const;

  /// Frame parities on compute/output vertex v given decoded outcomes m
  /// (indexed by vertex) and static contributions.
  FrameParities parities(std::size_t v, std::span<const Bit> m, const StaticFrame& frame) const;

  bool operator==(const MeasurementPattern& o) const { return graph_ == o.graph_ && spec_ == o.spec_; }

 private:
  BrickworkGraph graph_;
  std::vector<VertexSpec> spec_;
  std::vector<std::size_t> order_;
  std::vector<std::size_t> order_pos_;
  std::vector<std::vector<std::size_t>> xdep_;
  std::vector<std::vector<std::size_t>> zdep_;
  std::vector<std::size_t> inputs_;
  std::vector<std::size_t> outputs_;
};

/// Adds an X one-time-pad bit on input vertex v: X on v, and (after
/// entangling) Z on each neighbour.
void add_input_x(StaticFrame& frame, const BrickworkGraph& g, std::size_t v, Bit x);

}  // namespace bqc
