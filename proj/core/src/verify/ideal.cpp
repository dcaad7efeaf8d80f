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

#include "bqc/verify/ideal.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "bqc/childs/encrypted.hpp"
#include "bqc/errors.hpp"
#include "bqc/mbqc/compiler.hpp"
#include "bqc/ubqc/measuring_client.hpp"
#include "bqc/ubqc/protocol.hpp"
#include "bqc/ubqc/two_server.hpp"
#include "bqc/verify/traps.hpp"

namespace bqc {

namespace {

StateVector apply_unitary(const Eigen::MatrixXcd& u, const StateVector& psi) {
  if (static_cast<std::size_t>(u.cols()) != psi.dimension())
    throw InvalidArgument("input of dimension " + std::to_string(psi.dimension()) + " for a " +
                          std::to_string(u.cols()) + "-dimensional unitary");
  Eigen::VectorXcd v(static_cast<Eigen::Index>(psi.dimension()));
  for (std::size_t i = 0; i < psi.dimension(); ++i) v(static_cast<Eigen::Index>(i)) = psi[i];
  const Eigen::VectorXcd w = u * v;
  return StateVector::from_amplitudes(std::vector<cplx>(w.data(), w.data() + w.size()));
}

StateVector error_state(std::size_t data_qubits) {
  return StateVector::basis(data_qubits + 1, std::size_t{1} << data_qubits);
}

StateVector with_ok_flag(const StateVector& data) { return data.tensor(StateVector(1)); }

DensityMatrix dephased(const DensityMatrix& rho) {
  Eigen::MatrixXcd d = Eigen::MatrixXcd::Zero(rho.matrix().rows(), rho.matrix().cols());
  d.diagonal() = rho.matrix().diagonal();
  return DensityMatrix(std::move(d));
}

// Weighted sum of pure branch outputs, normalized by the total weight.
class BranchSum {
 public:
  explicit BranchSum(std::size_t dim) : acc_(Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(dim),
                                                                      static_cast<Eigen::Index>(dim))) {}
  void add(double w, const StateVector& psi) {
    Eigen::Map<const Eigen::VectorXcd> v(psi.amplitudes().data(), static_cast<Eigen::Index>(psi.dimension()));
    acc_ += w * v * v.adjoint();
    total_ += w;
  }
  void add_diagonal(double w, std::size_t index) {
    acc_(static_cast<Eigen::Index>(index), static_cast<Eigen::Index>(index)) += w;
    total_ += w;
  }
  DensityMatrix result() const {
    if (total_ <= 0) throw InvariantViolation("no branch had nonzero probability");
    return DensityMatrix(acc_ / total_);
  }

 private:
  Eigen::MatrixXcd acc_;
  double total_ = 0;
};

std::vector<Bit> bits_of(std::size_t mask, std::size_t n) {
  std::vector<Bit> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = static_cast<Bit>((mask >> i) & 1);
  return out;
}

// Branch enumeration beyond this many free outcomes is refused.
constexpr std::size_t kMaxBranchBits = 20;

void check_branch_bits(std::size_t n) {
  if (n > kMaxBranchBits)
    throw CapacityError(std::to_string(n) + " free outcomes is too many to enumerate (max " +
                        std::to_string(kMaxBranchBits) + ")");
}

// A circuit that turns |+>^n into `input`, for clients without a quantum
// input channel. Only basis states and |+>^n are reachable this way.
Circuit input_prefix(const Circuit& c, const StateVector& input) {
  if (input.qubits() != c.wires)
    throw InvalidArgument("input has " + std::to_string(input.qubits()) + " qubits, circuit has " +
                          std::to_string(c.wires));
  Circuit out{c.wires, {}};
  if (fidelity(input, StateVector::plus(c.wires)) > 1 - 1e-12) {
    out.gates = c.gates;
    return out;
  }
  for (std::size_t k = 0; k < input.dimension(); ++k) {
    if (std::norm(input[k]) < 1 - 1e-12) continue;
    for (std::size_t q = 0; q < c.wires; ++q) {
      out.gates.push_back(Gate::h(q));
      if ((k >> q) & 1) out.gates.push_back(Gate::x(q));
    }
    out.gates.insert(out.gates.end(), c.gates.begin(), c.gates.end());
    return out;
  }
  throw InvalidArgument("this mode only takes computational-basis or |+> inputs");
}

DensityMatrix ubqc_channel(const Circuit& c, const StateVector& input, std::uint64_t seed, DeltaRule rule,
                           bool trapped) {
  const MeasurementPattern base = compile_circuit(c);
  std::optional<TrappedPattern> tp;
  if (trapped) {
    Rng trap_rng = Rng(seed).fork(7);
    tp = insert_traps(base, 1, trap_rng);
  }
  const MeasurementPattern& p = tp ? tp->pattern : base;
  const std::size_t m = p.order().size();
  check_branch_bits(m);
  BranchSum sum(input.dimension() << (trapped ? 1 : 0));
  for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
    Rng rng(seed);
    UbqcOptions opts;
    opts.input = input;
    opts.rule = rule;
    opts.forced_outcomes = bits_of(mask, m);
    if (tp) opts.fixed_keys = tp->keys;
    try {
      const UbqcRun run = run_ubqc(p, rng, opts);
      if (!tp) {
        sum.add(run.branch_probability, run.output);
      } else if (check_traps(*tp, run.reported).accepted) {
        sum.add(run.branch_probability, with_ok_flag(run.output));
      } else {
        sum.add(run.branch_probability, error_state(c.wires));
      }
    } catch (const ImpossibleBranch&) {
    }
  }
  return sum.result();
}

DensityMatrix measuring_channel(const Circuit& c, const StateVector& input, std::uint64_t seed) {
  const MeasurementPattern p = compile_circuit(input_prefix(c, input));
  const std::size_t m = p.order().size();
  check_branch_bits(m);
  BranchSum sum(input.dimension());
  for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
    Rng rng(seed);
    MeasuringClientOptions opts;
    opts.forced_outcomes = bits_of(mask, m);
    try {
      const MeasuringRun run = run_client_measuring(p, rng, opts);
      sum.add(run.branch_probability, *run.output);
    } catch (const ImpossibleBranch&) {
    }
  }
  return sum.result();
}

DensityMatrix two_server_channel(const Circuit& c, const StateVector& input, std::uint64_t seed, DeltaRule rule) {
  const MeasurementPattern p = compile_circuit(input_prefix(c, input));
  const std::size_t n = p.vertex_count(), m = p.order().size(), w = p.logical_width();
  // The preparation outcomes only pick the pad; fixing them to 0 is one
  // branch of equal weight, so only the rounds and readout are enumerated.
  check_branch_bits(m + w);
  BranchSum sum(input.dimension());
  for (std::size_t mask = 0; mask < (std::size_t{1} << (m + w)); ++mask) {
    Rng rng(seed);
    TwoServerOptions opts;
    opts.rule = rule;
    std::vector<Bit> forced(n, 0);
    const auto rest = bits_of(mask, m + w);
    forced.insert(forced.end(), rest.begin(), rest.end());
    opts.forced_outcomes = std::move(forced);
    try {
      const TwoServerRun run = run_two_server(p, rng, opts);
      std::size_t index = 0;
      for (std::size_t i = 0; i < w; ++i) index |= std::size_t{run.output_bits[i]} << i;
      sum.add_diagonal(run.branch_probability, index);
    } catch (const ImpossibleBranch&) {
    }
  }
  return sum.result();
}

}  // namespace

DensityMatrix ideal_resource_eval(const IdealResource& ideal, const StateVector& psi_a, const ServerInputs& server) {
  const std::size_t n = psi_a.qubits();
  if (ideal.unitary.rows() != ideal.unitary.cols() || static_cast<std::size_t>(ideal.unitary.rows()) != psi_a.dimension())
    throw InvalidArgument("input does not match the resource's unitary");
  if (server.flag > 1) throw InvalidArgument("server flag must be 0 or 1");
  if (ideal.mode == IdealMode::kBlind) {
    if (server.flag == 0) return DensityMatrix::pure(apply_unitary(ideal.unitary, psi_a));
    if (!server.deviation) throw InvalidArgument("blind mode with b = 1 needs a deviation map");
    const StateVector joint = server.psi_b ? psi_a.tensor(*server.psi_b) : psi_a;
    return server.deviation(DensityMatrix::pure(joint));
  }
  if (server.flag == 0) return DensityMatrix::pure(with_ok_flag(apply_unitary(ideal.unitary, psi_a)));
  return DensityMatrix::pure(error_state(n));
}

double epsilon_correctness(const ProtocolChannel& channel, const IdealResource& ideal,
                           std::span<const StateVector> inputs, bool dephase) {
  if (inputs.empty()) throw InvalidArgument("epsilon_correctness needs at least one input");
  double worst = 0;
  for (const StateVector& in : inputs) {
    DensityMatrix want = ideal_resource_eval(ideal, in);
    if (dephase) want = dephased(want);
    const DensityMatrix got = channel(in);
    if (got.dimension() != want.dimension())
      throw InvalidArgument("protocol output has dimension " + std::to_string(got.dimension()) + ", ideal has " +
                            std::to_string(want.dimension()));
    worst = std::max(worst, trace_distance(got, want));
  }
  return worst;
}

std::string_view protocol_mode_name(ProtocolMode m) {
  switch (m) {
    case ProtocolMode::kUbqc: return "ubqc";
    case ProtocolMode::kUbqcTrapped: return "ubqc-trapped";
    case ProtocolMode::kClientMeasuring: return "client-measuring";
    case ProtocolMode::kTwoServer: return "two-server";
    case ProtocolMode::kChilds: return "childs";
    case ProtocolMode::kChildsHidden: return "childs-hidden";
  }
  return "?";
}

bool classical_input_only(ProtocolMode m) {
  return m == ProtocolMode::kClientMeasuring || m == ProtocolMode::kTwoServer;
}

IdealResource ideal_for(ProtocolMode m, const Circuit& c) {
  return IdealResource{m == ProtocolMode::kUbqcTrapped ? IdealMode::kBlindVerif : IdealMode::kBlind,
                       circuit_unitary(c)};
}

ProtocolChannel protocol_channel(ProtocolMode m, const Circuit& c, std::uint64_t seed, DeltaRule rule) {
  switch (m) {
    case ProtocolMode::kUbqc:
    case ProtocolMode::kUbqcTrapped:
      return [=](const StateVector& in) { return ubqc_channel(c, in, seed, rule, m == ProtocolMode::kUbqcTrapped); };
    case ProtocolMode::kClientMeasuring:
      return [=](const StateVector& in) { return measuring_channel(c, in, seed); };
    case ProtocolMode::kTwoServer:
      return [=](const StateVector& in) { return two_server_channel(c, in, seed, rule); };
    case ProtocolMode::kChilds:
      return [=](const StateVector& in) {
        Rng rng(seed);
        return run_encrypted_circuit(c, in, rng).output;
      };
    case ProtocolMode::kChildsHidden:
      return [=](const StateVector& in) {
        Rng rng(seed);
        return run_hidden_circuit(c, in, rng).output;
      };
  }
  throw InvalidArgument("unknown protocol mode");
}

double mode_epsilon(ProtocolMode m, const Circuit& c, std::uint64_t seed, DeltaRule rule) {
  const auto inputs = input_battery(c.wires, classical_input_only(m));
  return epsilon_correctness(protocol_channel(m, c, seed, rule), ideal_for(m, c), inputs,
                             m == ProtocolMode::kTwoServer);
}

std::vector<StateVector> input_battery(std::size_t n, bool classical_only) {
  check_qubit_count(n);
  std::vector<StateVector> out;
  for (std::size_t k = 0; k < (std::size_t{1} << n); ++k) out.push_back(StateVector::basis(n, k));
  out.push_back(StateVector::plus(n));
  if (!classical_only) {
    Rng rng(0xba77e7);
    for (int i = 0; i < 3; ++i) out.push_back(StateVector::random(n, rng));
  }
  return out;
}

}  // namespace bqc
