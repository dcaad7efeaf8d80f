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

// bqc: command-line front end for the blind-computation lab.
//
// Exit status: 0 success/accept, 1 verification reject, 2 usage or config
// error, 3 internal invariant violation.

#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "bqc/errors.hpp"
#include "bqc/harness/experiment.hpp"
#include "bqc/harness/json_io.hpp"
#include "bqc/mbqc/compiler.hpp"
#include "bqc/ubqc/adversary.hpp"
#include "bqc/ubqc/audit.hpp"
#include "bqc/verify/stabilizer_verify.hpp"
#include "bqc/verify/traps.hpp"
#include "json.hpp"
#include "keycheck.hpp"

namespace {

using json = nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitReject = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

struct Common {
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> trials;
  std::string out;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--seed", c.seed, "RNG seed");
  cmd->add_option("--trials", c.trials, "Number of sessions / samples")->check(CLI::PositiveNumber);
  cmd->add_option("--out", c.out, "Write the JSON result here instead of stdout");
}

void emit(const Common& c, const std::string& text) {
  if (c.out.empty()) {
    std::cout << text;
  } else {
    bqc::write_text_file(c.out, text);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Blind quantum computation lab"};
  app.require_subcommand(1);

  Common compile_opts, run_opts, audit_opts, verify_opts, key_opts;

  std::string circuit_path;
  auto* compile = app.add_subcommand("compile", "Compile a circuit to a brickwork pattern");
  compile->add_option("circuit", circuit_path, "bqc-circuit/1 file")->required();
  add_common(compile, compile_opts);

  std::string config_path;
  auto* run = app.add_subcommand("run", "Run an experiment config");
  run->add_option("config", config_path, "bqc-config/1 file")->required();
  add_common(run, run_opts);

  std::string audit_a, audit_b, audit_mode = "exact", audit_protocol = "ubqc";
  auto* audit = app.add_subcommand("audit", "Blindness audit between two patterns");
  audit->add_option("a", audit_a, "first pattern")->required();
  audit->add_option("b", audit_b, "second pattern")->required();
  audit->add_option("--mode", audit_mode, "exact or sampled")->check(CLI::IsMember({"exact", "sampled"}));
  audit->add_option("--protocol", audit_protocol, "ubqc or two-server")->check(CLI::IsMember({"ubqc", "two-server"}));
  add_common(audit, audit_opts);

  std::string verify_kind, verify_pattern, adversary = "honest", server = "honest";
  std::size_t traps = 1;
  double fraction = 1.0;
  std::optional<std::size_t> test_vertex;
  auto* verify = app.add_subcommand("verify", "Trap or stabilizer verification experiment");
  verify->add_option("kind", verify_kind, "traps or stabilizer")->required()->check(CLI::IsMember({"traps", "stabilizer"}));
  verify->add_option("pattern", verify_pattern, "bqc-pattern/1 file (computation pattern)")->required();
  verify->add_option("--adversary", adversary, "traps: adversary spec (honest, flip-all, pauli:Z@4, random-pauli, ...)");
  verify->add_option("--traps", traps, "traps: number of traps per session");
  verify->add_option("--server", server, "stabilizer: honest or product")->check(CLI::IsMember({"honest", "product"}));
  verify->add_option("--fraction", fraction, "stabilizer: test probability per session")->check(CLI::Range(0.0, 1.0));
  verify->add_option("--vertex", test_vertex, "stabilizer: always test this K_v");
  add_common(verify, verify_opts);

  auto* keycheck = app.add_subcommand("keycheck", "Check Pauli-key update rules against dense conjugation");
  add_common(keycheck, key_opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*compile) {
      const bqc::Circuit c = bqc::circuit_from_json(bqc::read_text_file(circuit_path));
      emit(compile_opts, bqc::pattern_to_json(bqc::compile_circuit(c)));
      return kExitOk;
    }

    if (*run) {
      bqc::ExperimentConfig cfg = bqc::config_from_json(bqc::read_text_file(config_path));
      if (run_opts.seed) cfg.seed = *run_opts.seed;
      if (run_opts.trials) cfg.trials = *run_opts.trials;
      const auto base = std::filesystem::path(config_path).parent_path();
      const bqc::ExperimentResult r = bqc::run_experiment(cfg, base.empty() ? "." : base);
      emit(run_opts, r.report);
      return r.accepted ? kExitOk : kExitReject;
    }

    if (*audit) {
      const auto a = bqc::pattern_from_json(bqc::read_text_file(audit_a));
      const auto b = bqc::pattern_from_json(bqc::read_text_file(audit_b));
      const auto protocol = audit_protocol == "ubqc" ? bqc::AuditProtocol::kUbqc : bqc::AuditProtocol::kTwoServer;
      json doc = {{"mode", audit_mode}, {"protocol", audit_protocol}};
      bool pass = false;
      if (audit_mode == "exact") {
        const double d = bqc::blindness_audit_exact(a, b, protocol);
        doc["trace_distance"] = d;
        pass = d < 1e-10;
      } else {
        bqc::Rng rng(audit_opts.seed.value_or(0));
        const auto s = bqc::blindness_audit_sampled(a, b, audit_opts.trials.value_or(bqc::kSampledAuditMinTrials), rng,
                                                    protocol);
        doc.update({{"trials", s.trials},         {"distance", s.distance},         {"null_mean", s.null_mean},
                    {"null_sigma", s.null_sigma}, {"within_3_sigma", s.within_3_sigma}, {"delta_chi2", s.delta_chi2},
                    {"delta_uniform", s.delta_uniform}});
        pass = s.within_3_sigma && s.delta_uniform;
      }
      doc["pass"] = pass;
      emit(audit_opts, doc.dump(1) + "\n");
      return pass ? kExitOk : kExitReject;
    }

    if (*verify) {
      const auto p = bqc::pattern_from_json(bqc::read_text_file(verify_pattern));
      bqc::Rng rng(verify_opts.seed.value_or(0));
      const std::size_t trials = verify_opts.trials.value_or(1000);
      bqc::VerdictReport v;
      if (verify_kind == "traps") {
        bqc::make_adversary(adversary);  // validate before the run
        v = bqc::detection_rate([&](bqc::Rng& r) { return bqc::insert_traps(p, traps, r); },
                                [&] { return bqc::make_adversary(adversary); }, trials, rng);
      } else {
        v = bqc::stabilizer_verify(p, fraction, trials,
                                   server == "honest" ? bqc::StreamingServer::kHonest : bqc::StreamingServer::kProductState,
                                   rng, test_vertex);
      }
      emit(verify_opts, bqc::verdict_to_json(v));
      return v.accepted ? kExitOk : kExitReject;
    }

    if (*keycheck) {
      bqc::Rng rng(key_opts.seed.value_or(0));
      const auto r = bqc::tools::keycheck(key_opts.trials.value_or(100), rng);
      emit(key_opts, r.report);
      return r.ok() ? kExitOk : kExitInternal;
    }
  } catch (const bqc::InvalidArgument& e) {
    std::cerr << "bqc: " << e.what() << "\n";
    return kExitUsage;
  } catch (const bqc::CapacityError& e) {
    std::cerr << "bqc: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "bqc: internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitUsage;
}
