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

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bqc/quantum/gates.hpp"
#include "bqc/quantum/qubit_register.hpp"
#include "bqc/quantum/random.hpp"

namespace bqc {

/// The server's qubits addressed by public vertex id. This is everything an
/// adversary can touch.
class ServerQubits {
 public:
  ServerQubits(QubitRegister& world, const std::vector<std::optional<QubitId>>& held) : world_(world), held_(held) {}

  std::size_t vertex_count() const { return held_.size(); }
  bool holds(std::uint32_t v) const { return v < held_.size() && held_[v].has_value(); }
  void apply_pauli(std::uint32_t v, Pauli p);
  void apply_unitary(std::uint32_t v, const Mat2& u);

 private:
  QubitId at(std::uint32_t v) const;
  QubitRegister& world_;
  const std::vector<std::optional<QubitId>>& held_;
};

/// A deviating server. Hooks only ever see public data (vertex ids, received
/// angles, its own measurement results) and the adversary's own randomness.
class Adversary {
 public:
  virtual ~Adversary() = default;
  virtual std::string name() const = 0;
  /// After every CZ, before the first measurement.
  virtual void after_entangle(ServerQubits&, Rng&) {}
  /// Angle actually measured for vertex v given the received delta.
  virtual Angle8 measurement_angle(std::uint32_t, Angle8 delta, Rng&) { return delta; }
  /// Bit reported for vertex v given the measured one.
  virtual Bit report(std::uint32_t, Bit measured, Rng&) { return measured; }
};

std::unique_ptr<Adversary> honest_server();
std::unique_ptr<Adversary> flip_all_outcomes();
std::unique_ptr<Adversary> flip_outcomes(std::vector<std::uint32_t> vertices);
/// Applies p to vertex v after entangling.
std::unique_ptr<Adversary> pauli_on_vertex(std::uint32_t v, Pauli p);
/// Uniform Pauli in {X, Y, Z} on a uniformly chosen held qubit after entangling.
std::unique_ptr<Adversary> random_pauli_random_qubit();
/// Ignores delta and measures every qubit at `angle`.
std::unique_ptr<Adversary> fixed_basis(Angle8 angle);

/// Parses "honest", "flip-all", "flip:3,5", "pauli:Z@4", "random-pauli",
/// "basis:2". Throws InvalidArgument otherwise.
std::unique_ptr<Adversary> make_adversary(std::string_view spec);

}  // namespace bqc
