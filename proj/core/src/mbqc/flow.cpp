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

#include "bqc/mbqc/flow.hpp"

#include <algorithm>
#include <string>

#include "bqc/errors.hpp"

namespace bqc {

std::vector<std::size_t> brickwork_order(const BrickworkGraph& g) {
  std::vector<std::size_t> order;
  order.reserve(g.rows() * (g.cols() - 1));
  for (std::size_t c = 0; c + 1 < g.cols(); ++c)
    for (std::size_t r = 0; r < g.rows(); ++r) order.push_back(g.id(r, c));
  return order;
}

FlowDependencies brickwork_flow(const BrickworkGraph& g, std::span<const Role> roles) {
  const std::size_t n = g.vertex_count();
  if (roles.size() != n) throw InvalidArgument("role list does not match the graph");
  auto logical = [&](std::size_t v) { return roles[v] == Role::kCompute || roles[v] == Role::kOutput; };

  FlowDependencies deps;
  deps.xdep.resize(n);
  deps.zdep.resize(n);
  for (std::size_t u = 0; u < n; ++u) {
    if (roles[u] != Role::kCompute) continue;
    const std::size_t r = g.row_of(u), c = g.col_of(u);
    if (c + 1 >= g.cols() || !logical(g.id(r, c + 1)))
      throw InvalidArgument("compute vertex (" + std::to_string(r) + "," + std::to_string(c) +
                            ") has no successor");
    const std::size_t f = g.id(r, c + 1);
    deps.xdep[f].push_back(u);
    for (std::size_t w : g.neighbors(f))
      if (w != u && logical(w)) deps.zdep[w].push_back(u);
  }
  for (auto& z : deps.zdep) std::sort(z.begin(), z.end());
  return deps;
}

}  // namespace bqc
