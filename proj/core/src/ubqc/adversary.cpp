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

#include "bqc/ubqc/adversary.hpp"

#include <algorithm>
#include <charconv>
#include <string>

#include "bqc/errors.hpp"

namespace bqc {

QubitId ServerQubits::at(std::uint32_t v) const {
  if (!holds(v)) throw InvalidArgument("server does not hold vertex " + std::to_string(v));
  return *held_[v];
}

void ServerQubits::apply_pauli(std::uint32_t v, Pauli p) { world_.apply_pauli(at(v), p); }

void ServerQubits::apply_unitary(std::uint32_t v, const Mat2& u) { world_.apply_matrix(at(v), u); }

namespace {

class Honest : public Adversary {
 public:
  std::string name() const override { return "honest"; }
};

class FlipAll : public Adversary {
 public:
  std::string name() const override { return "flip-all"; }
  Bit report(std::uint32_t, Bit measured, Rng&) override { return measured ^ 1; }
};

class FlipSome : public Adversary {
 public:
  explicit FlipSome(std::vector<std::uint32_t> v) : vertices_(std::move(v)) { std::sort(vertices_.begin(), vertices_.end()); }
  std::string name() const override { return "flip"; }
  Bit report(std::uint32_t v, Bit measured, Rng&) override {
    return std::binary_search(vertices_.begin(), vertices_.end(), v) ? measured ^ 1 : measured;
  }

 private:
  std::vector<std::uint32_t> vertices_;
};

class PauliOn : public Adversary {
 public:
  PauliOn(std::uint32_t v, Pauli p) : v_(v), p_(p) {}
  std::string name() const override { return "pauli"; }
  void after_entangle(ServerQubits& q, Rng&) override { q.apply_pauli(v_, p_); }

 private:
  std::uint32_t v_;
  Pauli p_;
};

class RandomPauli : public Adversary {
 public:
  std::string name() const override { return "random-pauli"; }
  void after_entangle(ServerQubits& q, Rng& rng) override {
    const auto p = static_cast<Pauli>(1 + rng.below(3));
    q.apply_pauli(static_cast<std::uint32_t>(rng.below(q.vertex_count())), p);
  }
};

class FixedBasis : public Adversary {
 public:
  explicit FixedBasis(Angle8 a) : a_(a) {}
  std::string name() const override { return "basis"; }
  Angle8 measurement_angle(std::uint32_t, Angle8, Rng&) override { return a_; }

 private:
  Angle8 a_;
};

std::uint32_t parse_u32(std::string_view s, std::string_view spec) {
  std::uint32_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw InvalidArgument("bad number in adversary spec '" + std::string(spec) + "'");
  return v;
}

}  // namespace

std::unique_ptr<Adversary> honest_server() { return std::make_unique<Honest>(); }
std::unique_ptr<Adversary> flip_all_outcomes() { return std::make_unique<FlipAll>(); }
std::unique_ptr<Adversary> flip_outcomes(std::vector<std::uint32_t> v) { return std::make_unique<FlipSome>(std::move(v)); }
std::unique_ptr<Adversary> pauli_on_vertex(std::uint32_t v, Pauli p) { return std::make_unique<PauliOn>(v, p); }
std::unique_ptr<Adversary> random_pauli_random_qubit() { return std::make_unique<RandomPauli>(); }
std::unique_ptr<Adversary> fixed_basis(Angle8 a) { return std::make_unique<FixedBasis>(a); }

std::unique_ptr<Adversary> make_adversary(std::string_view spec) {
  if (spec == "honest") return honest_server();
  if (spec == "flip-all") return flip_all_outcomes();
  if (spec == "random-pauli") return random_pauli_random_qubit();
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos) throw InvalidArgument("unknown adversary '" + std::string(spec) + "'");
  const std::string_view head = spec.substr(0, colon), tail = spec.substr(colon + 1);
  if (head == "flip") {
    std::vector<std::uint32_t> v;
    std::size_t start = 0;
    while (start <= tail.size()) {
      auto end = tail.find(',', start);
      if (end == std::string_view::npos) end = tail.size();
      v.push_back(parse_u32(tail.substr(start, end - start), spec));
      start = end + 1;
    }
    return flip_outcomes(std::move(v));
  }
  if (head == "pauli") {
    const auto at = tail.find('@');
    if (at != 1) throw InvalidArgument("adversary spec must look like pauli:Z@4");
    Pauli p;
    switch (tail[0]) {
      case 'X': p = Pauli::kX; break;
      case 'Y': p = Pauli::kY; break;
      case 'Z': p = Pauli::kZ; break;
      default: throw InvalidArgument("unknown Pauli in adversary spec '" + std::string(spec) + "'");
    }
    return pauli_on_vertex(parse_u32(tail.substr(2), spec), p);
  }
  if (head == "basis") {
    const std::uint32_t k = parse_u32(tail, spec);
    if (k > 7) throw InvalidArgument("basis angle must be 0..7");
    return fixed_basis(Angle8(static_cast<int>(k)));
  }
  throw InvalidArgument("unknown adversary '" + std::string(spec) + "'");
}

}  // namespace bqc
