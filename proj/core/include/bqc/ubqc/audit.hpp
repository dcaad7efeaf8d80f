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
#include <cstdint>
#include <memory>
#include <span>
#include <utility>
#include <vector>

#include "bqc/mbqc/pattern.hpp"
#include "bqc/quantum/random.hpp"

namespace bqc {

enum class AuditProtocol : std::uint8_t {
  kUbqc,       // the server's payloads and received angles
  kTwoServer,  // server 1's view (remotely prepared payloads) and server 2's angles
};

/// A weighted family of patterns standing for one client input (e.g. a
/// pattern averaged over trap positions and dummy bits).
using PatternEnsemble = std::vector<std::pair<double, MeasurementPattern>>;

inline constexpr std::size_t kExactAuditMaxVertices = 4;

/// Exact audit: enumerates every key of every vertex and treats the reported
/// bits as free inputs. Returns the largest trace distance between the two
/// server views (block-diagonal over angle sequences) over all reported-bit
/// vectors. Throws InvalidArgument when dimensions differ or exceed
/// kExactAuditMaxVertices.
double blindness_audit_exact(const PatternEnsemble& a, const PatternEnsemble& b,
                             AuditProtocol protocol = AuditProtocol::kUbqc);
double blindness_audit_exact(const MeasurementPattern& a, const MeasurementPattern& b,
                             AuditProtocol protocol = AuditProtocol::kUbqc);

/// The enumerated server view of one ensemble, for comparing many inputs
/// without recomputing each one per pair.
class ExactServerView {
 public:
  struct Impl;

 private:
  std::shared_ptr<const Impl> impl_;
  friend ExactServerView server_view_exact(const PatternEnsemble&, AuditProtocol);
  friend double view_distance(const ExactServerView&, const ExactServerView&);
};

ExactServerView server_view_exact(const PatternEnsemble& e, AuditProtocol protocol = AuditProtocol::kUbqc);
/// Same quantity as blindness_audit_exact.
double view_distance(const ExactServerView& a, const ExactServerView& b);

struct SampledAudit {
  std::size_t trials = 0;  // per pattern
  /// Largest total-variation distance between the empirical distributions of
  /// any per-vertex (delta, b) table or consecutive (delta, delta') table.
  double distance = 0;
  /// Same statistic under random relabelling of the pooled trials.
  double null_mean = 0;
  double null_sigma = 0;
  bool within_3_sigma = false;  // distance <= null_mean + 3 null_sigma
  /// Chi-square of all received angles against uniform (7 dof).
  double delta_chi2 = 0;
  bool delta_uniform = false;  // at 99%
};

inline constexpr std::size_t kSampledAuditMinTrials = 100000;

/// Runs honest sessions on each pattern and compares what the (first)
/// server saw.
SampledAudit blindness_audit_sampled(const MeasurementPattern& a, const MeasurementPattern& b, std::size_t trials,
                                     Rng& rng, AuditProtocol protocol = AuditProtocol::kUbqc,
                                     std::size_t permutations = 40);

}  // namespace bqc
