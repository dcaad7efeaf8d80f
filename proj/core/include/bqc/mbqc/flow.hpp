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
#include <span>
#include <vector>

#include "bqc/mbqc/graph.hpp"
#include "bqc/mbqc/pattern.hpp"
#include "bqc/quantum/angle.hpp"

namespace bqc {

/// phi' = (-1)^sx * phi + sz * pi.
constexpr Angle8 adapt_angle(Angle8 phi, Bit sx, Bit sz) {
  Angle8 out = sx ? -phi : phi;
  if (sz) out += Angle8::pi();
  return out;
}

struct FlowDependencies {
  std::vector<std::vector<std::size_t>> xdep;
  std::vector<std::vector<std::size_t>> zdep;
};

/// Column-major order over every vertex outside the last column.
std::vector<std::size_t> brickwork_order(const BrickworkGraph& g);

/// Brickwork flow f(i, j) = (i, j + 1) restricted to compute/output vertices:
/// xdep(v) = {left neighbour}, zdep(v) = {u : f(u) adjacent to v, u != v}.
/// Entries exist only for compute and output vertices. Throws InvalidArgument
/// when a compute vertex has no compute/output right neighbour.
FlowDependencies brickwork_flow(const BrickworkGraph& g, std::span<const Role> roles);

}  // namespace bqc
