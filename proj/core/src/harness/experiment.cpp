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

#include "bqc/harness/experiment.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <optional>

#include "bqc/childs/encrypted.hpp"
#include "bqc/errors.hpp"
#include "bqc/mbqc/compiler.hpp"
#include "bqc/mbqc/executor.hpp"
#include "bqc/ubqc/audit.hpp"
#include "bqc/ubqc/measuring_client.hpp"
#include "bqc/ubqc/protocol.hpp"
#include "bqc/ubqc/two_server.hpp"
#include "bqc/verify/stabilizer_verify.hpp"
#include "bqc/verify/stats.hpp"
#include "json.hpp"

namespace bqc {

namespace {

using json = nlohmann::json;

struct Source {
  std::optional<Circuit> circuit;
  MeasurementPattern pattern;
  StateVector reference;  // honest logical output on |+>^n
};

Source load_source(const ExperimentConfig& cfg, const std::filesystem::path& base) {
  if (cfg.circuit) {
    Circuit c = circuit_from_json(read_text_file(base / *cfg.circuit));
    const bool encrypted = cfg.protocol == ProtocolId::kChilds || cfg.protocol == ProtocolId::kChildsHidden;
    // Encrypted compute never builds a pattern; a one-column stub keeps the struct whole.
    MeasurementPattern p = encrypted ? MeasurementPattern::computation(c.wires, 1, {}) : compile_circuit(c);
    StateVector ref = simulate_circuit(c);
    return {std::move(c), std::move(p), std::move(ref)};
  }
  MeasurementPattern p = pattern_from_json(read_text_file(base / *cfg.pattern));
  Rng rng(cfg.seed);
  StateVector ref = run_pattern(p, rng).output;
  return {std::nullopt, std::move(p), std::move(ref)};
}

struct Fidelities {
  double min = std::numeric_limits<double>::infinity();
  double sum = 0;
  std::size_t n = 0;
  void add(double f) {
    min = std::min(min, f);
    sum += f;
    ++n;
  }
  json to_json() const {
    if (n == 0) return nullptr;
    return {{"min", min}, {"mean", sum / static_cast<double>(n)}};
  }
};

json verdict_json(const VerdictReport& v) { return json::parse(verdict_to_json(v)); }

void merge(VerdictReport& into, const VerdictReport& v) {
  into.traps_checked += v.traps_checked;
  into.failures.insert(into.failures.end(), v.failures.begin(), v.failures.end());
  into.accepted = into.failures.empty();
}

}  // namespace

ExperimentResult run_experiment(const ExperimentConfig& cfg, const std::filesystem::path& base_dir) {
  if (cfg.trials == 0) throw ConfigError("config.trials: must be at least 1");
  const Source src = load_source(cfg, base_dir);
  const MeasurementPattern& p = src.pattern;
  const Rng root(cfg.seed);

  ExperimentResult result;
  json results = json::object();
  Fidelities fid;
  std::size_t scans_passed = 0;
  std::optional<Transcript> first;

  switch (cfg.protocol) {
    case ProtocolId::kUbqc: {
      VerdictReport verdict;
      std::size_t rejected = 0;
      for (std::size_t s = 0; s < cfg.trials; ++s) {
        Rng session = root.fork(s);
        Rng gen = session.fork(0), run_rng = session.fork(1);
        auto adversary = make_adversary(cfg.adversary);
        UbqcOptions opts;
        opts.adversary = adversary.get();
        std::optional<TrappedPattern> tp;
        if (cfg.traps > 0) {
          tp = insert_traps(p, cfg.traps, gen);
          opts.fixed_keys = tp->keys;
        }
        const UbqcRun run = run_ubqc(tp ? tp->pattern : p, run_rng, opts);
        fid.add(fidelity(run.output, src.reference));
        if (transcript_scan(run.transcript, run.secrets)) ++scans_passed;
        if (tp) {
          const VerdictReport v = check_traps(*tp, run.reported);
          if (!v.accepted) ++rejected;
          merge(verdict, v);
        }
        if (s == 0) first = run.transcript;
      }
      if (cfg.traps > 0) {
        verdict.estimate = DetectionEstimate{cfg.trials, rejected,
                                             static_cast<double>(rejected) / static_cast<double>(cfg.trials),
                                             wilson_interval(rejected, cfg.trials)};
        results["verdict"] = verdict_json(verdict);
        result.accepted = verdict.accepted;
      }
      break;
    }
    case ProtocolId::kTwoServer: {
      const std::size_t dim = src.reference.dimension();
      std::vector<std::size_t> counts(dim, 0);
      for (std::size_t s = 0; s < cfg.trials; ++s) {
        Rng run_rng = root.fork(s);
        auto adversary = make_adversary(cfg.adversary);
        TwoServerOptions opts;
        opts.adversary = adversary.get();
        const TwoServerRun run = run_two_server(p, run_rng, opts);
        std::size_t k = 0;
        for (std::size_t i = 0; i < run.output_bits.size(); ++i) k |= std::size_t{run.output_bits[i]} << i;
        ++counts[k];
        if (transcript_scan(run.transcript, run.secrets)) ++scans_passed;
        if (s == 0) first = run.transcript;
      }
      std::vector<double> ideal(dim), observed(dim);
      for (std::size_t k = 0; k < dim; ++k) {
        ideal[k] = std::norm(src.reference[k]);
        observed[k] = static_cast<double>(counts[k]) / static_cast<double>(cfg.trials);
      }
      results["output_counts"] = counts;
      results["output_tv_to_ideal"] = total_variation(observed, ideal);
      break;
    }
    case ProtocolId::kClientMeasuring: {
      if (cfg.test_fraction > 0) {
        Rng rng = root.fork(0);
        const VerdictReport v = stabilizer_verify(p, cfg.test_fraction, cfg.trials, StreamingServer::kHonest, rng);
        results["verdict"] = verdict_json(v);
        result.accepted = v.accepted;
        break;
      }
      for (std::size_t s = 0; s < cfg.trials; ++s) {
        Rng run_rng = root.fork(s);
        const MeasuringRun run = run_client_measuring(p, run_rng);
        fid.add(fidelity(*run.output, src.reference));
        ++scans_passed;  // the client holds no secrets to leak
        if (s == 0) first = run.transcript;
      }
      break;
    }
    case ProtocolId::kChilds:
    case ProtocolId::kChildsHidden: {
      const Circuit& c = *src.circuit;
      std::size_t rounds = 0, cycles = 0;
      for (std::size_t s = 0; s < cfg.trials; ++s) {
        Rng run_rng = root.fork(s);
        const StateVector in = StateVector::plus(c.wires);
        const EncryptedRun run = cfg.protocol == ProtocolId::kChilds ? run_encrypted_circuit(c, in, run_rng)
                                                                     : run_hidden_circuit(c, in, run_rng);
        fid.add(run.output.fidelity(src.reference));
        rounds = run.rounds;
        cycles = run.cycles;
        // Keys never leave the client object; the transcript carries
        // payload references and gate names only.
        ++scans_passed;
        if (s == 0) first = run.transcript;
      }
      results["rounds"] = rounds;
      if (cfg.protocol == ProtocolId::kChildsHidden) results["cycles"] = cycles;
      break;
    }
  }

  if (fid.n > 0) results["fidelity"] = fid.to_json();
  results["transcript_scans_passed"] = scans_passed;
  if (scans_passed != (cfg.protocol == ProtocolId::kClientMeasuring && cfg.test_fraction > 0 ? 0 : cfg.trials))
    result.accepted = false;

  if (cfg.audit != AuditMode::kNone) {
    const MeasurementPattern other = pattern_from_json(read_text_file(base_dir / *cfg.audit_against));
    const AuditProtocol ap = cfg.protocol == ProtocolId::kTwoServer ? AuditProtocol::kTwoServer : AuditProtocol::kUbqc;
    if (cfg.audit == AuditMode::kExact) {
      results["audit"] = {{"mode", "exact"}, {"trace_distance", blindness_audit_exact(p, other, ap)}};
    } else {
      Rng rng = root.fork(0xa0d1);
      const SampledAudit a = blindness_audit_sampled(p, other, cfg.trials, rng, ap);
      results["audit"] = {{"mode", "sampled"},          {"trials", a.trials},
                          {"distance", a.distance},      {"null_mean", a.null_mean},
                          {"null_sigma", a.null_sigma},  {"within_3_sigma", a.within_3_sigma},
                          {"delta_chi2", a.delta_chi2},  {"delta_uniform", a.delta_uniform}};
    }
  }

  json report = {{"format", kReportFormat},
                 {"config", json::parse(config_to_json(cfg))},
                 {"results", std::move(results)},
                 {"accepted", result.accepted}};
  if (cfg.transcripts && first) report["transcript_hex"] = to_hex(first->serialize());
  result.report = report.dump(1) + "\n";
  return result;
}

}  // namespace bqc
