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

#include "bqc/verify/stabilizer_verify.hpp"

#include <string>

#include "bqc/errors.hpp"

namespace bqc {

VerdictReport stabilizer_verify(const MeasurementPattern& p, double test_fraction, std::size_t sessions,
                                StreamingServer server, Rng& rng, std::optional<std::size_t> vertex) {
  if (!(test_fraction >= 0.0 && test_fraction <= 1.0)) throw InvalidArgument("test fraction must lie in [0, 1]");
  if (vertex && *vertex >= p.vertex_count())
    throw InvalidArgument("K_" + std::to_string(*vertex) + " needs qubits the stream never sends (" +
                          std::to_string(p.vertex_count()) + " vertices)");
  VerdictReport out;
  std::size_t tests = 0, rejections = 0;
  for (std::size_t s = 0; s < sessions; ++s) {
    Rng session = rng.fork(s);
    Rng choice = session.fork(0), run_rng = session.fork(1);
    MeasuringClientOptions opts;
    opts.server = server;
    // Compare before drawing so that p = 1 never computes and p = 0 never tests.
    const bool test = test_fraction >= 1.0 || (test_fraction > 0.0 && choice.uniform() < test_fraction);
    if (test) opts.test_vertex = vertex ? *vertex : choice.below(p.vertex_count());
    const MeasuringRun run = run_client_measuring(p, run_rng, opts);
    if (!test) continue;
    ++tests;
    if (*run.test_outcome != 0) {
      ++rejections;
      out.failures.push_back({*opts.test_vertex, 0, *run.test_outcome});
    }
  }
  out.traps_checked = tests;
  out.accepted = out.failures.empty();
  if (tests > 0) {
    out.estimate = DetectionEstimate{tests, rejections, static_cast<double>(rejections) / static_cast<double>(tests),
                                     wilson_interval(rejections, tests)};
  }
  return out;
}

}  // namespace bqc
