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
#include <utility>
#include <vector>

#include "bqc/quantum/state_vector.hpp"

namespace bqc {

using Edge = std::pair<std::size_t, std::size_t>;

/// Simple undirected graph on vertices 0..n-1. Edges are stored normalized
/// (first < second) and sorted.
class Graph {
 public:
  explicit Graph(std::size_t n = 0);

  std::size_t vertex_count() const { return adj_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<std::size_t>& neighbors(std::size_t v) const;
  bool has_edge(std::size_t a, std::size_t b) const;

  /// Throws InvalidArgument on self-loops, duplicates, or out-of-range ids.
  void add_edge(std::size_t a, std::size_t b);

 private:
  std::vector<std::vector<std::size_t>> adj_;
  std::vector<Edge> edges_;
};

/// Brickwork resource graph, vertex id = row * cols + col.
///
/// Horizontal edges join every (i, j)-(i, j+1). With 1-based columns j,
/// vertical edges sit at j = 3 (mod 8) and j + 2 between rows (2k-1, 2k), and
/// at j = 7 (mod 8) and j + 2 between rows (2k, 2k+1) (1-based rows). In
/// 0-based terms: columns 2, 4 (mod 8) join rows (0,1), (2,3), ... and columns
/// 6, 8 (mod 8, never column 0) join rows (1,2), (3,4), ....
class BrickworkGraph {
 public:
  /// Throws InvalidArgument unless rows, cols >= 1.
  BrickworkGraph(std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t vertex_count() const { return rows_ * cols_; }
  std::size_t id(std::size_t row, std::size_t col) const { return row * cols_ + col; }
  std::size_t row_of(std::size_t v) const { return v / cols_; }
  std::size_t col_of(std::size_t v) const { return v % cols_; }

  const Graph& graph() const { return graph_; }
  const std::vector<std::size_t>& neighbors(std::size_t v) const { return graph_.neighbors(v); }

  /// Whether the build rule places a vertical edge between 0-based rows
  /// (top, top + 1) at 0-based column col.
  static bool has_vertical(std::size_t top, std::size_t col);

  bool operator==(const BrickworkGraph& o) const { return rows_ == o.rows_ && cols_ == o.cols_; }

 private:
  std::size_t rows_;
  std::size_t cols_;
  Graph graph_;
};

BrickworkGraph build_brickwork(std::size_t rows, std::size_t cols);

/// Tensor of |+> over every vertex followed by CZ on every edge.
StateVector graph_state(const Graph& g);
/// Same, applying CZs in the given edge order (must be a permutation of g's edges).
StateVector graph_state(const Graph& g, std::span<const Edge> edge_order);

}  // namespace bqc
