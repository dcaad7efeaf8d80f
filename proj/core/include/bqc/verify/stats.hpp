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

namespace bqc {

struct Interval {
  double lo = 0;
  double hi = 1;
  bool contains(double x) const { return lo <= x && x <= hi; }
};

/// Wilson score interval for a binomial proportion (z = 1.96 for 95%).
Interval wilson_interval(std::size_t successes, std::size_t trials, double z = 1.96);

/// Pearson chi-square of counts against the uniform distribution.
double chi_square_uniform(std::span<const std::size_t> counts);

/// Upper 1% point of chi-square with 7 degrees of freedom (8 angle values).
inline constexpr double kChiSquare99Dof7 = 18.4753;

/// Total-variation distance between two count tables of equal length, each
/// normalized by its own total.
double total_variation(std::span<const std::size_t> a, std::span<const std::size_t> b);
double total_variation(std::span<const double> a, std::span<const double> b);

}  // namespace bqc
