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
#include <optional>
#include <vector>

#include "bqc/harness/channel.hpp"
#include "bqc/quantum/measure.hpp"
#include "bqc/quantum/random.hpp"
#include "bqc/ubqc/adversary.hpp"

namespace bqc {

/// UBQC server. Knows only the declared graph, the payload references, the
/// angles it receives and its own results.
class UbqcServer {
 public:
  UbqcServer(Channel& channel, Adversary& adversary, OutcomeSource& outcomes, Rng& adversary_rng);

  /// Receives the graph declaration and every payload.
  void receive_setup();
  /// Declaration only; qubits then arrive through adopt() (trusted setup).
  void receive_declaration();
  void adopt(std::size_t v, QubitId q);
  /// CZ on every brickwork edge. Throws ProtocolError when payloads are missing.
  void entangle();
  /// Receives one angle, measures (through the adversary hooks) and reports.
  void serve_round();
  /// Sends the last column back to the client.
  void return_last_column();
  /// Receives one MeasureZ request, measures and reports.
  void serve_z_readout();

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

 private:
  Channel& channel_;
  Adversary& adversary_;
  OutcomeSource& outcomes_;
  Rng& adversary_rng_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::optional<QubitId>> held_;
  std::vector<bool> measured_;
  bool entangled_ = false;
};

}  // namespace bqc
