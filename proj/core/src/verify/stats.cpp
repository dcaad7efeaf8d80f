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

#include "bqc/verify/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "bqc/errors.hpp"

namespace bqc {

Interval wilson_interval(std::size_t successes, std::size_t trials, double z) {
  if (trials == 0) throw InvalidArgument("wilson interval needs at least one trial");
  if (successes > trials) throw InvalidArgument("more successes than trials");
  const double n = static_cast<double>(trials);
  const double p = static_cast<double>(successes) / n;
  const double z2 = z * z;
  const double denom = 1 + z2 / n;
  const double centre = (p + z2 / (2 * n)) / denom;
  const double half = z * std::sqrt(p * (1 - p) / n + z2 / (4 * n * n)) / denom;
  return {std::max(0.0, centre - half), std::min(1.0, centre + half)};
}

double chi_square_uniform(std::span<const std::size_t> counts) {
  if (counts.empty()) throw InvalidArgument("empty count table");
  const double total = static_cast<double>(std::accumulate(counts.begin(), counts.end(), std::size_t{0}));
  if (total == 0) throw InvalidArgument("no observations");
  const double expected = total / static_cast<double>(counts.size());
  double chi2 = 0;
  for (std::size_t c : counts) {
    const double d = static_cast<double>(c) - expected;
    chi2 += d * d / expected;
  }
  return chi2;
}

double total_variation(std::span<const std::size_t> a, std::span<const std::size_t> b) {
  if (a.size() != b.size()) throw InvalidArgument("count tables differ in size");
  const double ta = static_cast<double>(std::accumulate(a.begin(), a.end(), std::size_t{0}));
  const double tb = static_cast<double>(std::accumulate(b.begin(), b.end(), std::size_t{0}));
  if (ta == 0 || tb == 0) throw InvalidArgument("empty count table");
  double sum = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    sum += std::abs(static_cast<double>(a[i]) / ta - static_cast<double>(b[i]) / tb);
  return 0.5 * sum;
}

double total_variation(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw InvalidArgument("distributions differ in size");
  double sum = 0;
  for (std::size_t i = 0; i < a.size(); ++i) sum += std::abs(a[i] - b[i]);
  return 0.5 * sum;
}

}  // namespace bqc
