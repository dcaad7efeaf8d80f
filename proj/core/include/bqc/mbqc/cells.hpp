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

#include <array>
#include <optional>

#include "bqc/quantum/angle.hpp"
#include "bqc/quantum/gates.hpp"

namespace bqc {

/// Angles of one row across the four columns of a compiled step.
using RowAngles = std::array<Angle8, 4>;

/// Angles of a brick: two rows over four columns, with CZs between the rows
/// after the second and the fourth column.
struct BrickAngles {
  RowAngles top{};
  RowAngles bottom{};
  bool operator==(const BrickAngles&) const = default;
};

/// Logical action of measuring one vertex at angle k: H Rz(-k).
Mat2 column_unitary(Angle8 k);
/// col(d) col(c) col(b) col(a) for angles (a, b, c, d).
Mat2 row_unitary(const RowAngles& a);
/// CZ * (L2 bottom (x) L2 top) * CZ * (L1 bottom (x) L1 top); top row is local qubit 0.
Mat4 brick_unitary(const BrickAngles& a);

/// First brick (in a fixed search order) realizing target up to global phase.
std::optional<BrickAngles> find_brick_angles(const Mat4& target);
/// First row assignment realizing target up to global phase.
std::optional<RowAngles> find_row_angles(const Mat2& target);

/// CNOT bricks found by find_brick_angles; re-validated by the tests.
inline constexpr BrickAngles kCnotTopControl{
    {Angle8(6), Angle8(0), Angle8(0), Angle8(0)}, {Angle8(0), Angle8(6), Angle8(0), Angle8(2)}};
inline constexpr BrickAngles kCnotBottomControl{
    {Angle8(0), Angle8(6), Angle8(0), Angle8(2)}, {Angle8(6), Angle8(0), Angle8(0), Angle8(0)}};

}  // namespace bqc
