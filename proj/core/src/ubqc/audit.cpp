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

#include "bqc/ubqc/audit.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <numeric>
#include <string>

#include <Eigen/Dense>

#include "bqc/errors.hpp"
#include "bqc/quantum/density_matrix.hpp"
#include "bqc/ubqc/client.hpp"
#include "bqc/ubqc/protocol.hpp"
#include "bqc/ubqc/rsp.hpp"
#include "bqc/ubqc/two_server.hpp"
#include "bqc/verify/stats.hpp"

namespace bqc {

namespace {

// Angle-sequence index -> weighted density of the payloads.
using QuantumView = std::map<std::size_t, Eigen::MatrixXcd>;
// Angle-sequence index -> probability (server 2's view).
using ClassicalView = std::map<std::size_t, double>;

struct Views {
  QuantumView server;
  ClassicalView server2;
};

void check_dims(const PatternEnsemble& a, const PatternEnsemble& b) {
  if (a.empty() || b.empty()) throw InvalidArgument("empty pattern ensemble");
  const auto& g = a.front().second.graph();
  for (const auto* e : {&a, &b}) {
    double total = 0;
    for (const auto& [w, p] : *e) {
      if (w < 0) throw InvalidArgument("negative ensemble weight");
      total += w;
      if (!(p.graph() == g))
        throw InvalidArgument("audited patterns must share dimensions (the leaked information)");
    }
    if (std::abs(total - 1.0) > 1e-10) throw InvalidArgument("ensemble weights must sum to 1");
  }
  if (g.vertex_count() > kExactAuditMaxVertices)
    throw InvalidArgument("exact audit supports at most " + std::to_string(kExactAuditMaxVertices) + " vertices");
}

void accumulate(Views& views, double weight, const MeasurementPattern& p, const std::vector<Bit>& reported,
                AuditProtocol protocol) {
  const std::size_t n = p.vertex_count();
  const std::size_t dim = std::size_t{1} << n;
  const std::size_t keys = std::size_t{1} << (4 * n);
  Rng unused(0);
  ClientState cs = client_init(p, unused);
  const StateVector pair = bell_state(kRspPair);

  for (std::size_t key = 0; key < keys; ++key) {
    double w = weight;
    std::size_t alpha_index = 0, mult = 1;
    std::vector<StateVector> payloads;
    payloads.reserve(n);
    for (std::size_t v = 0; v < n; ++v) {
      const std::size_t code = (key >> (4 * v)) & 15;
      const Bit r = code & 1;
      const Angle8 angle(static_cast<int>(code >> 1));
      if (protocol == AuditProtocol::kUbqc) {
        cs.r[v] = r;
        cs.theta[v] = angle;
        payloads.push_back(payload_state(cs, v));
        w /= 16.0;
      } else {
        // angle plays alpha, r plays server 2's outcome s.
        OutcomeSource s = OutcomeSource::forced({r});
        RspResult res = rsp_measure(pair, angle, s);
        cs.r[v] = r;
        cs.theta[v] = -angle;
        payloads.push_back(std::move(res.remote));
        w *= res.outcome.probability / 8.0;
        alpha_index += static_cast<std::size_t>(angle.k()) * mult;
        mult *= 8;
      }
    }
    std::fill(cs.m.begin(), cs.m.end(), Bit{0});
    cs.cursor = 0;
    std::size_t index = 0;
    mult = 1;
    for (std::size_t i = 0; i < p.order().size(); ++i) {
      const std::size_t v = p.order()[i];
      index += static_cast<std::size_t>(client_delta(cs, v).k()) * mult;
      mult *= 8;
      client_decode(cs, v, reported[i]);
    }
    StateVector joint = payloads[0];
    for (std::size_t v = 1; v < n; ++v) joint = joint.tensor(payloads[v]);
    const Eigen::Map<const Eigen::VectorXcd> psi(joint.amplitudes().data(), static_cast<Eigen::Index>(dim));
    auto [it, fresh] = views.server.try_emplace(index, Eigen::MatrixXcd::Zero(dim, dim));
    it->second += w * psi * psi.adjoint();
    if (protocol == AuditProtocol::kTwoServer) views.server2[alpha_index] += w;
  }
}

double distance(const Views& a, const Views& b) {
  const Eigen::Index dim = a.server.begin()->second.rows();
  const Eigen::MatrixXcd zero = Eigen::MatrixXcd::Zero(dim, dim);
  auto get = [&](const QuantumView& v, std::size_t k) -> const Eigen::MatrixXcd& {
    auto it = v.find(k);
    return it == v.end() ? zero : it->second;
  };
  double td = 0;
  std::map<std::size_t, bool> seen;
  for (const auto* v : {&a.server, &b.server})
    for (const auto& [k, m] : *v) seen[k] = true;
  for (const auto& [k, unused] : seen) td += trace_norm_hermitian(get(a.server, k) - get(b.server, k));
  td *= 0.5;

  double tv = 0;
  std::map<std::size_t, double> diff;
  for (const auto& [k, w] : a.server2) diff[k] += w;
  for (const auto& [k, w] : b.server2) diff[k] -= w;
  for (const auto& [k, d] : diff) tv += std::abs(d);
  return std::max(td, 0.5 * tv);
}

}  // namespace

struct ExactServerView::Impl {
  std::size_t rows = 0, cols = 0;
  AuditProtocol protocol = AuditProtocol::kUbqc;
  std::vector<Views> by_reported;  // indexed by the reported-bit vector
};

ExactServerView server_view_exact(const PatternEnsemble& e, AuditProtocol protocol) {
  check_dims(e, e);
  auto impl = std::make_shared<ExactServerView::Impl>();
  const auto& g = e.front().second.graph();
  impl->rows = g.rows();
  impl->cols = g.cols();
  impl->protocol = protocol;
  const std::size_t measured = e.front().second.order().size();
  for (std::size_t bits = 0; bits < (std::size_t{1} << measured); ++bits) {
    std::vector<Bit> reported(measured);
    for (std::size_t i = 0; i < measured; ++i) reported[i] = static_cast<Bit>((bits >> i) & 1);
    Views v;
    for (const auto& [w, p] : e) accumulate(v, w, p, reported, protocol);
    impl->by_reported.push_back(std::move(v));
  }
  ExactServerView out;
  out.impl_ = std::move(impl);
  return out;
}

double view_distance(const ExactServerView& a, const ExactServerView& b) {
  if (!a.impl_ || !b.impl_) throw InvalidArgument("empty server view");
  if (a.impl_->rows != b.impl_->rows || a.impl_->cols != b.impl_->cols)
    throw InvalidArgument("audited patterns must share dimensions (the leaked information)");
  if (a.impl_->protocol != b.impl_->protocol) throw InvalidArgument("views come from different protocols");
  double worst = 0;
  for (std::size_t i = 0; i < a.impl_->by_reported.size(); ++i)
    worst = std::max(worst, distance(a.impl_->by_reported[i], b.impl_->by_reported[i]));
  return worst;
}

double blindness_audit_exact(const PatternEnsemble& a, const PatternEnsemble& b, AuditProtocol protocol) {
  check_dims(a, b);
  return view_distance(server_view_exact(a, protocol), server_view_exact(b, protocol));
}

double blindness_audit_exact(const MeasurementPattern& a, const MeasurementPattern& b, AuditProtocol protocol) {
  return blindness_audit_exact(PatternEnsemble{{1.0, a}}, PatternEnsemble{{1.0, b}}, protocol);
}

namespace {

// What the (first) server saw in one session: angle and reported bit per
// measured position.
struct ViewSample {
  std::vector<std::uint8_t> delta;
  std::vector<std::uint8_t> b;
};

ViewSample observe(const Transcript& t, const MeasurementPattern& p) {
  ViewSample s;
  for (const auto& e : t.entries()) {
    if (e.from == Party::kClient && e.to == Party::kServer)
      if (auto* a = std::get_if<AngleMsg>(&e.message)) s.delta.push_back(static_cast<std::uint8_t>(a->delta.k()));
    if (e.from == Party::kServer && e.to == Party::kClient)
      if (auto* o = std::get_if<OutcomeMsg>(&e.message); o && p.is_measured(o->vertex)) s.b.push_back(o->b);
  }
  return s;
}

// Largest TV over the per-position (delta, b) tables and the consecutive
// (delta, delta') tables; groups given by `in_a` over the pooled samples.
double statistic(const std::vector<ViewSample>& pool, const std::vector<bool>& in_a, std::size_t positions) {
  double worst = 0;
  for (std::size_t i = 0; i < positions; ++i) {
    std::vector<std::size_t> ca(16, 0), cb(16, 0);
    for (std::size_t t = 0; t < pool.size(); ++t) (in_a[t] ? ca : cb)[pool[t].delta[i] * 2 + pool[t].b[i]]++;
    worst = std::max(worst, total_variation(ca, cb));
  }
  for (std::size_t i = 0; i + 1 < positions; ++i) {
    std::vector<std::size_t> ca(64, 0), cb(64, 0);
    for (std::size_t t = 0; t < pool.size(); ++t)
      (in_a[t] ? ca : cb)[pool[t].delta[i] * 8 + pool[t].delta[i + 1]]++;
    worst = std::max(worst, total_variation(ca, cb));
  }
  return worst;
}

}  // namespace

SampledAudit blindness_audit_sampled(const MeasurementPattern& a, const MeasurementPattern& b, std::size_t trials,
                                     Rng& rng, AuditProtocol protocol, std::size_t permutations) {
  if (!(a.graph() == b.graph())) throw InvalidArgument("audited patterns must share dimensions");
  if (trials == 0) throw InvalidArgument("sampled audit needs trials");
  if (permutations < 2) throw InvalidArgument("sampled audit needs at least two permutations");
  const std::size_t positions = a.order().size();
  if (positions == 0) throw InvalidArgument("nothing is measured; the server sees no angles");

  std::vector<ViewSample> pool;
  pool.reserve(2 * trials);
  std::vector<std::size_t> delta_counts(8, 0);
  for (std::size_t side = 0; side < 2; ++side) {
    const MeasurementPattern& p = side == 0 ? a : b;
    for (std::size_t t = 0; t < trials; ++t) {
      Rng trial = rng.fork(2 * t + side);
      const Transcript tr = protocol == AuditProtocol::kUbqc ? run_ubqc(p, trial).transcript
                                                             : run_two_server(p, trial).transcript;
      ViewSample s = observe(tr, p);
      if (s.delta.size() != positions || s.b.size() != positions)
        throw InvariantViolation("transcript does not have one round per measured vertex");
      for (auto d : s.delta) delta_counts[d]++;
      pool.push_back(std::move(s));
    }
  }

  SampledAudit out;
  out.trials = trials;
  std::vector<bool> in_a(2 * trials, false);
  std::fill(in_a.begin(), in_a.begin() + static_cast<std::ptrdiff_t>(trials), true);
  out.distance = statistic(pool, in_a, positions);

  Rng perm = rng.fork(0xa0d17);
  std::vector<double> null;
  for (std::size_t k = 0; k < permutations; ++k) {
    for (std::size_t i = in_a.size() - 1; i > 0; --i) {
      const std::size_t j = perm.below(i + 1);
      const bool tmp = in_a[i];
      in_a[i] = in_a[j];
      in_a[j] = tmp;
    }
    null.push_back(statistic(pool, in_a, positions));
  }
  out.null_mean = std::accumulate(null.begin(), null.end(), 0.0) / static_cast<double>(null.size());
  double var = 0;
  for (double x : null) var += (x - out.null_mean) * (x - out.null_mean);
  out.null_sigma = std::sqrt(var / static_cast<double>(null.size() - 1));
  out.within_3_sigma = out.distance <= out.null_mean + 3 * out.null_sigma;
  out.delta_chi2 = chi_square_uniform(delta_counts);
  out.delta_uniform = out.delta_chi2 < kChiSquare99Dof7;
  return out;
}

}  // namespace bqc
