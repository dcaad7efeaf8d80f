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

#include "bqc/mbqc/pattern.hpp"

#include <string>

#include "bqc/errors.hpp"
#include "bqc/mbqc/flow.hpp"

namespace bqc {

std::string_view role_name(Role r) {
  switch (r) {
    case Role::kCompute: return "compute";
    case Role::kDummy: return "dummy";
    case Role::kTrap: return "trap";
    case Role::kOutput: return "output";
  }
  return "?";
}

Role parse_role(std::string_view name) {
  for (Role r : {Role::kCompute, Role::kDummy, Role::kTrap, Role::kOutput})
    if (role_name(r) == name) return r;
  throw InvalidArgument("unknown role: " + std::string(name));
}

namespace {

std::string at(const BrickworkGraph& g, std::size_t v) {
  return "(" + std::to_string(g.row_of(v)) + "," + std::to_string(g.col_of(v)) + ")";
}

Bit get(std::span<const Bit> bits, std::size_t i) { return i < bits.size() ? bits[i] : Bit{0}; }

}  // namespace

MeasurementPattern::MeasurementPattern(BrickworkGraph graph, std::vector<VertexSpec> spec)
    : graph_(std::move(graph)), spec_(std::move(spec)) {
  const std::size_t rows = graph_.rows(), cols = graph_.cols();
  if (spec_.size() != graph_.vertex_count())
    throw InvalidArgument("pattern has " + std::to_string(spec_.size()) + " vertex specs for a " +
                          std::to_string(rows) + "x" + std::to_string(cols) + " graph");

  for (std::size_t r = 0; r < rows; ++r) {
    const Role first = spec_[graph_.id(r, 0)].role;
    const bool computation = first == Role::kCompute || first == Role::kOutput;
    for (std::size_t c = 0; c < cols; ++c) {
      const std::size_t v = graph_.id(r, c);
      const Role role = spec_[v].role;
      const bool last = c + 1 == cols;
      if (computation) {
        Role want = last ? Role::kOutput : Role::kCompute;
        if (role != want)
          throw InvalidArgument("vertex " + at(graph_, v) + " in a computation row must be " +
                                std::string(role_name(want)));
      } else {
        if (role != Role::kDummy && role != Role::kTrap)
          throw InvalidArgument("vertex " + at(graph_, v) + " in a trap row must be a dummy or trap");
        if (role == Role::kTrap && last) throw InvalidArgument("trap " + at(graph_, v) + " in the last column");
      }
      if (spec_[v].dummy_bit > 1) throw InvalidArgument("dummy bit at " + at(graph_, v) + " is not 0/1");
      if (role == Role::kTrap)
        for (std::size_t w : graph_.neighbors(v))
          if (spec_[w].role != Role::kDummy)
            throw InvalidArgument("trap " + at(graph_, v) + " has a non-dummy neighbour " + at(graph_, w));
    }
    if (computation) {
      inputs_.push_back(graph_.id(r, 0));
      outputs_.push_back(graph_.id(r, cols - 1));
    }
  }

  std::vector<Role> roles;
  roles.reserve(spec_.size());
  for (const auto& s : spec_) roles.push_back(s.role);
  FlowDependencies deps = brickwork_flow(graph_, roles);
  xdep_ = std::move(deps.xdep);
  zdep_ = std::move(deps.zdep);

  order_ = brickwork_order(graph_);
  order_pos_.assign(spec_.size(), order_.size());
  for (std::size_t i = 0; i < order_.size(); ++i) order_pos_[order_[i]] = i;
}

MeasurementPattern MeasurementPattern::computation(std::size_t rows, std::size_t cols,
                                                   std::span<const Angle8> angles) {
  BrickworkGraph g(rows, cols);
  if (angles.size() != rows * (cols - 1))
    throw InvalidArgument("expected " + std::to_string(rows * (cols - 1)) + " angles");
  std::vector<VertexSpec> spec(g.vertex_count());
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c + 1 < cols; ++c) spec[g.id(r, c)] = {Role::kCompute, angles[r * (cols - 1) + c], 0};
    spec[g.id(r, cols - 1)] = {Role::kOutput, {}, 0};
  }
  return MeasurementPattern(std::move(g), std::move(spec));
}

std::size_t MeasurementPattern::order_index(std::size_t v) const {
  if (v >= order_pos_.size() || order_pos_[v] == order_.size())
    throw InvalidArgument("vertex " + std::to_string(v) + " is not measured");
  return order_pos_[v];
}

std::vector<std::size_t> MeasurementPattern::computation_rows() const {
  std::vector<std::size_t> rows;
  for (std::size_t v : outputs_) rows.push_back(graph_.row_of(v));
  return rows;
}

std::vector<std::size_t> MeasurementPattern::traps() const {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < spec_.size(); ++v)
    if (spec_[v].role == Role::kTrap) out.push_back(v);
  return out;
}

std::vector<std::size_t> MeasurementPattern::dummies() const {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < spec_.size(); ++v)
    if (spec_[v].role == Role::kDummy) out.push_back(v);
  return out;
}

StaticFrame MeasurementPattern::static_frame() const {
  StaticFrame f;
  f.x.assign(spec_.size(), 0);
  f.z.assign(spec_.size(), 0);
  for (std::size_t v = 0; v < spec_.size(); ++v) {
    if (spec_[v].role != Role::kDummy || !spec_[v].dummy_bit) continue;
    for (std::size_t w : graph_.neighbors(v)) f.z[w] ^= 1;
  }
  return f;
}

FrameParities MeasurementPattern::parities(std::size_t v, std::span<const Bit> m, const StaticFrame& frame) const {
  FrameParities p{get(frame.x, v), get(frame.z, v)};
  for (std::size_t u : xdep_.at(v)) p.x ^= get(m, u);
  for (std::size_t u : zdep_.at(v)) p.z ^= get(m, u);
  return p;
}

void add_input_x(StaticFrame& frame, const BrickworkGraph& g, std::size_t v, Bit x) {
  frame.x.resize(g.vertex_count(), 0);
  frame.z.resize(g.vertex_count(), 0);
  if (!x) return;
  frame.x[v] ^= 1;
  for (std::size_t w : g.neighbors(v)) frame.z[w] ^= 1;
}

}  // namespace bqc
