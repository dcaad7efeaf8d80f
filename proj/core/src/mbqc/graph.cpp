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

#include "bqc/mbqc/graph.hpp"

#include <algorithm>
#include <string>

#include "bqc/errors.hpp"
#include "bqc/quantum/gates.hpp"

namespace bqc {

Graph::Graph(std::size_t n) : adj_(n) {}

const std::vector<std::size_t>& Graph::neighbors(std::size_t v) const {
  if (v >= adj_.size()) throw InvalidArgument("vertex out of range: " + std::to_string(v));
  return adj_[v];
}

bool Graph::has_edge(std::size_t a, std::size_t b) const {
  if (a >= adj_.size() || b >= adj_.size()) return false;
  const auto& n = adj_[a];
  return std::find(n.begin(), n.end(), b) != n.end();
}

void Graph::add_edge(std::size_t a, std::size_t b) {
  if (a >= adj_.size() || b >= adj_.size()) throw InvalidArgument("edge endpoint out of range");
  if (a == b) throw InvalidArgument("self-loop on vertex " + std::to_string(a));
  if (has_edge(a, b)) throw InvalidArgument("duplicate edge");
  adj_[a].push_back(b);
  adj_[b].push_back(a);
  std::sort(adj_[a].begin(), adj_[a].end());
  std::sort(adj_[b].begin(), adj_[b].end());
  Edge e{std::min(a, b), std::max(a, b)};
  edges_.insert(std::lower_bound(edges_.begin(), edges_.end(), e), e);
}

bool BrickworkGraph::has_vertical(std::size_t top, std::size_t col) {
  // 1-based column j = col + 1.
  std::size_t j = col + 1;
  if (top % 2 == 0) return j % 8 == 3 || j % 8 == 5;
  return (j % 8 == 7 || j % 8 == 1) && j > 1;
}

BrickworkGraph::BrickworkGraph(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), graph_(rows * cols) {
  if (rows == 0 || cols == 0) throw InvalidArgument("brickwork dimensions must be positive");
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c + 1 < cols; ++c) graph_.add_edge(id(r, c), id(r, c + 1));
  for (std::size_t c = 0; c < cols; ++c)
    for (std::size_t r = 0; r + 1 < rows; ++r)
      if (has_vertical(r, c)) graph_.add_edge(id(r, c), id(r + 1, c));
}

BrickworkGraph build_brickwork(std::size_t rows, std::size_t cols) { return BrickworkGraph(rows, cols); }

StateVector graph_state(const Graph& g) { return graph_state(g, g.edges()); }

StateVector graph_state(const Graph& g, std::span<const Edge> edge_order) {
  check_qubit_count(g.vertex_count());
  if (edge_order.size() != g.edges().size()) throw InvalidArgument("edge order is not a permutation");
  StateVector s = StateVector::plus(g.vertex_count());
  for (const auto& [a, b] : edge_order) {
    if (!g.has_edge(a, b)) throw InvalidArgument("edge order is not a permutation");
    apply(s, Gate::cz(a, b));
  }
  return s;
}

}  // namespace bqc
