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

#include <compare>
#include <cstdint>
#include <string>

namespace bqc {

/// An angle k*pi/4, k in 0..7. All protocol angles live in this set, so
/// arithmetic is exact (mod 8) and encodes to a single byte.
class Angle8 {
 public:
  constexpr Angle8() = default;
  constexpr explicit Angle8(int k) : k_(static_cast<std::uint8_t>(((k % 8) + 8) % 8)) {}

  static constexpr Angle8 zero() { return Angle8(0); }
  static constexpr Angle8 pi() { return Angle8(4); }

  constexpr int k() const { return k_; }
  double radians() const;

  constexpr Angle8 operator-() const { return Angle8(-static_cast<int>(k_)); }
  constexpr Angle8& operator+=(Angle8 o) {
    k_ = static_cast<std::uint8_t>((k_ + o.k_) % 8);
    return *this;
  }
  constexpr Angle8& operator-=(Angle8 o) { return *this += -o; }
  friend constexpr Angle8 operator+(Angle8 a, Angle8 b) { return a += b; }
  friend constexpr Angle8 operator-(Angle8 a, Angle8 b) { return a -= b; }

  constexpr auto operator<=>(const Angle8&) const = default;

  std::string to_string() const;

 private:
  std::uint8_t k_ = 0;
};

using Bit = std::uint8_t;

}  // namespace bqc
