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

#include "bqc/verify/traps.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "bqc/errors.hpp"
#include "bqc/ubqc/protocol.hpp"

namespace bqc {

namespace {

// Rejection sampling keeps the choice uniform over independent sets.
constexpr int kPlacementAttempts = 10000;

TrappedPattern place_traps(const BrickworkGraph& g, std::vector<VertexSpec> spec, std::size_t first_row,
                           std::size_t n_traps, Rng& rng) {
  const auto in_region = [&](std::size_t v) { return g.row_of(v) >= first_row; };
  std::vector<std::size_t> eligible;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (!in_region(v) || g.col_of(v) + 1 == g.cols()) continue;
    const auto& nb = g.neighbors(v);
    if (std::all_of(nb.begin(), nb.end(), in_region)) eligible.push_back(v);
  }
  if (eligible.size() < n_traps)
    throw InvalidArgument("only " + std::to_string(eligible.size()) + " vertices can host a trap, " +
                          std::to_string(n_traps) + " requested");
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (in_region(v)) spec[v] = VertexSpec{Role::kDummy, Angle8{}, rng.bit()};
  }

  std::vector<std::size_t> chosen;
  for (int attempt = 0;; ++attempt) {
    if (attempt == kPlacementAttempts)
      throw InvalidArgument("could not place " + std::to_string(n_traps) + " non-adjacent traps");
    std::vector<std::size_t> pool = eligible;
    for (std::size_t i = 0; i < n_traps; ++i) std::swap(pool[i], pool[i + rng.below(pool.size() - i)]);
    chosen.assign(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(n_traps));
    bool independent = true;
    for (std::size_t i = 0; i < n_traps && independent; ++i)
      for (std::size_t j = i + 1; j < n_traps && independent; ++j) independent = !g.graph().has_edge(chosen[i], chosen[j]);
    if (independent) break;
  }
  std::sort(chosen.begin(), chosen.end());

  for (std::size_t t : chosen) spec[t] = VertexSpec{Role::kTrap, Angle8{}, 0};
  TrappedPattern tp{MeasurementPattern(g, std::move(spec)), {}, {}, {}, {}};
  tp.traps = tp.pattern.traps();
  tp.dummies = tp.pattern.dummies();
  for (std::size_t t : tp.traps) {
    const VertexKey key{rng.bit(), rng.angle()};
    Bit expect = key.r;
    for (std::size_t w : g.neighbors(t)) expect ^= tp.pattern.vertex(w).dummy_bit;
    tp.keys[t] = key;
    tp.predictions[t] = expect;
  }
  return tp;
}

}  // namespace

TrappedPattern insert_traps(const MeasurementPattern& base, std::size_t n_traps, Rng& rng, std::size_t extra_rows) {
  if (extra_rows == 0) throw InvalidArgument("traps need at least one extra row");
  const auto& bg = base.graph();
  const BrickworkGraph g(bg.rows() + extra_rows, bg.cols());
  std::vector<VertexSpec> spec(g.vertex_count());
  for (std::size_t v = 0; v < base.vertex_count(); ++v) spec[g.id(bg.row_of(v), bg.col_of(v))] = base.vertex(v);
  return place_traps(g, std::move(spec), bg.rows(), n_traps, rng);
}

TrappedPattern trap_region(std::size_t rows, std::size_t cols, std::size_t n_traps, Rng& rng) {
  const BrickworkGraph g(rows, cols);
  return place_traps(g, std::vector<VertexSpec>(g.vertex_count()), 0, n_traps, rng);
}

VerdictReport check_traps(const TrappedPattern& tp, std::span<const Bit> reported) {
  if (reported.size() < tp.pattern.vertex_count())
    throw InvalidArgument("expected " + std::to_string(tp.pattern.vertex_count()) + " outcomes, got " +
                          std::to_string(reported.size()));
  VerdictReport out;
  for (const auto& [t, expect] : tp.predictions) {
    ++out.traps_checked;
    if (reported[t] != expect) out.failures.push_back({t, expect, reported[t]});
  }
  out.accepted = out.failures.empty();
  return out;
}

VerdictReport detection_rate(const TrapGenerator& generate, const AdversaryFactory& adversary, std::size_t trials,
                             Rng& rng) {
  if (trials == 0) throw InvalidArgument("detection_rate needs at least one trial");
  VerdictReport out;
  std::size_t rejections = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    Rng trial = rng.fork(t);
    Rng gen_rng = trial.fork(0), run_rng = trial.fork(1);
    const TrappedPattern tp = generate(gen_rng);
    auto adv = adversary();
    UbqcOptions opts;
    opts.adversary = adv.get();
    opts.fixed_keys = tp.keys;
    const UbqcRun run = run_ubqc(tp.pattern, run_rng, opts);
    VerdictReport v = check_traps(tp, run.reported);
    out.traps_checked += v.traps_checked;
    if (!v.accepted) ++rejections;
    out.failures.insert(out.failures.end(), v.failures.begin(), v.failures.end());
  }
  out.accepted = out.failures.empty();
  const double rate = static_cast<double>(rejections) / static_cast<double>(trials);
  out.estimate = DetectionEstimate{trials, rejections, rate, wilson_interval(rejections, trials)};
  return out;
}

}  // namespace bqc
