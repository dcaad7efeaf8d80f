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

#include "bqc/harness/json_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "bqc/errors.hpp"
#include "json.hpp"

namespace bqc {

namespace {

using json = nlohmann::json;

json parse_document(std::string_view text, std::string_view format) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string(format) + ": " + e.what());
  }
  if (!doc.is_object()) throw ConfigError(std::string(format) + ": top level must be an object");
  return doc;
}

// Typed field access that remembers what was read, so leftovers can be
// reported as unknown keys.
class Fields {
 public:
  Fields(const json& obj, std::string where) : obj_(obj), where_(std::move(where)) {
    if (!obj_.is_object()) throw ConfigError(where_ + ": expected an object");
  }

  bool has(const std::string& key) const { return obj_.contains(key); }

  const json& raw(const std::string& key) {
    seen_.insert(key);
    if (!obj_.contains(key)) throw ConfigError(path(key) + ": missing");
    return obj_.at(key);
  }

  std::uint64_t uint(const std::string& key) {
    const json& v = raw(key);
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0))
      throw ConfigError(path(key) + ": expected a non-negative integer");
    return v.get<std::uint64_t>();
  }

  std::string string(const std::string& key) {
    const json& v = raw(key);
    if (!v.is_string()) throw ConfigError(path(key) + ": expected a string");
    return v.get<std::string>();
  }

  double number(const std::string& key) {
    const json& v = raw(key);
    if (!v.is_number()) throw ConfigError(path(key) + ": expected a number");
    return v.get<double>();
  }

  bool boolean(const std::string& key) {
    const json& v = raw(key);
    if (!v.is_boolean()) throw ConfigError(path(key) + ": expected true or false");
    return v.get<bool>();
  }

  const json& array(const std::string& key) {
    const json& v = raw(key);
    if (!v.is_array()) throw ConfigError(path(key) + ": expected an array");
    return v;
  }

  void format(std::string_view expected) {
    const std::string f = string("format");
    if (f != expected) throw ConfigError(path("format") + ": expected \"" + std::string(expected) + "\", got \"" + f + "\"");
  }

  void finish() const {
    for (const auto& [key, _] : obj_.items())
      if (!seen_.count(key)) throw ConfigError(path(key) + ": unknown key");
  }

  std::string path(const std::string& key) const { return where_ + "." + key; }

 private:
  const json& obj_;
  std::string where_;
  std::set<std::string> seen_;
};

Angle8 angle_field(Fields& f, const std::string& key) {
  const std::uint64_t k = f.uint(key);
  if (k > 7) throw ConfigError(f.path(key) + ": angles are multiples of pi/4, k in 0..7");
  return Angle8(static_cast<int>(k));
}

template <class T, class Fn>
T rethrow_as_config(const std::string& where, Fn fn) {
  try {
    return fn();
  } catch (const ConfigError&) {
    throw;
  } catch (const InvalidArgument& e) {
    throw ConfigError(where + ": " + e.what());
  }
}

}  // namespace

std::string pattern_to_json(const MeasurementPattern& p) {
  json verts = json::array();
  for (const VertexSpec& s : p.vertices()) {
    json v = {{"role", std::string(role_name(s.role))}};
    if (s.role == Role::kCompute) v["angle"] = s.angle.k();
    if (s.role == Role::kDummy) v["bit"] = s.dummy_bit;
    verts.push_back(std::move(v));
  }
  const json doc = {{"format", kPatternFormat},
                    {"rows", p.graph().rows()},
                    {"cols", p.graph().cols()},
                    {"vertices", std::move(verts)}};
  return doc.dump(1) + "\n";
}

MeasurementPattern pattern_from_json(std::string_view text) {
  const json doc = parse_document(text, "pattern");
  Fields f(doc, "pattern");
  f.format(kPatternFormat);
  const std::size_t rows = f.uint("rows"), cols = f.uint("cols");
  if (rows == 0 || cols == 0) throw ConfigError("pattern: rows and cols must be positive");
  if (rows * cols > kMaxQubits * 4) throw ConfigError("pattern: too many vertices");
  const json& verts = f.array("vertices");
  f.finish();
  if (verts.size() != rows * cols)
    throw ConfigError("pattern.vertices: expected " + std::to_string(rows * cols) + " entries, got " +
                      std::to_string(verts.size()));
  std::vector<VertexSpec> spec;
  for (std::size_t i = 0; i < verts.size(); ++i) {
    Fields v(verts[i], "pattern.vertices[" + std::to_string(i) + "]");
    VertexSpec s;
    const std::string role = v.string("role");
    s.role = rethrow_as_config<Role>(v.path("role"), [&] { return parse_role(role); });
    if (s.role == Role::kCompute) s.angle = angle_field(v, "angle");
    if (s.role == Role::kDummy) {
      const std::uint64_t b = v.uint("bit");
      if (b > 1) throw ConfigError(v.path("bit") + ": must be 0 or 1");
      s.dummy_bit = static_cast<Bit>(b);
    }
    v.finish();
    spec.push_back(s);
  }
  return rethrow_as_config<MeasurementPattern>("pattern", [&] {
    return MeasurementPattern(BrickworkGraph(rows, cols), std::move(spec));
  });
}

std::string circuit_to_json(const Circuit& c) {
  json gates = json::array();
  for (const Gate& g : c.gates) {
    json targets = json::array({g.targets[0]});
    if (g.arity() == 2) targets.push_back(g.targets[1]);
    json j = {{"gate", std::string(gate_name(g.kind))}, {"targets", std::move(targets)}};
    if (g.kind == GateKind::kRZ) j["angle"] = g.angle.k();
    gates.push_back(std::move(j));
  }
  const json doc = {{"format", kCircuitFormat}, {"wires", c.wires}, {"gates", std::move(gates)}};
  return doc.dump(1) + "\n";
}

Circuit circuit_from_json(std::string_view text) {
  const json doc = parse_document(text, "circuit");
  Fields f(doc, "circuit");
  f.format(kCircuitFormat);
  Circuit c;
  c.wires = f.uint("wires");
  if (c.wires == 0 || c.wires > kMaxQubits) throw ConfigError("circuit.wires: must be in 1.." + std::to_string(kMaxQubits));
  const json& gates = f.array("gates");
  f.finish();
  for (std::size_t i = 0; i < gates.size(); ++i) {
    Fields g(gates[i], "circuit.gates[" + std::to_string(i) + "]");
    const std::string name = g.string("gate");
    Gate gate;
    gate.kind = rethrow_as_config<GateKind>(g.path("gate"), [&] { return parse_gate_kind(name); });
    const json& targets = g.array("targets");
    if (targets.size() != gate.arity())
      throw ConfigError(g.path("targets") + ": " + name + " takes " + std::to_string(gate.arity()) + " wire(s)");
    for (std::size_t t = 0; t < targets.size(); ++t) {
      if (!targets[t].is_number_unsigned()) throw ConfigError(g.path("targets") + ": expected wire indices");
      gate.targets[t] = targets[t].get<std::size_t>();
    }
    if (gate.kind == GateKind::kRZ) gate.angle = angle_field(g, "angle");
    g.finish();
    c.gates.push_back(gate);
  }
  rethrow_as_config<int>("circuit", [&] {
    c.validate();
    return 0;
  });
  return c;
}

std::string_view audit_mode_name(AuditMode m) {
  switch (m) {
    case AuditMode::kNone: return "none";
    case AuditMode::kExact: return "exact";
    case AuditMode::kSampled: return "sampled";
  }
  return "?";
}

ExperimentConfig config_from_json(std::string_view text) {
  const json doc = parse_document(text, "config");
  Fields f(doc, "config");
  f.format(kConfigFormat);
  ExperimentConfig c;
  const std::string protocol = f.string("protocol");
  c.protocol = rethrow_as_config<ProtocolId>(f.path("protocol"), [&] { return parse_protocol(protocol); });
  if (f.has("pattern")) c.pattern = f.string("pattern");
  if (f.has("circuit")) c.circuit = f.string("circuit");
  c.seed = f.uint("seed");
  c.trials = f.uint("trials");
  if (f.has("adversary")) c.adversary = f.string("adversary");
  if (f.has("traps")) c.traps = f.uint("traps");
  if (f.has("test_fraction")) c.test_fraction = f.number("test_fraction");
  if (f.has("audit")) {
    const std::string a = f.string("audit");
    if (a == "none") c.audit = AuditMode::kNone;
    else if (a == "exact") c.audit = AuditMode::kExact;
    else if (a == "sampled") c.audit = AuditMode::kSampled;
    else throw ConfigError(f.path("audit") + ": expected none, exact or sampled");
  }
  if (f.has("audit_against")) c.audit_against = f.string("audit_against");
  if (f.has("transcripts")) c.transcripts = f.boolean("transcripts");
  f.finish();

  if (c.trials == 0) throw ConfigError("config.trials: must be at least 1");
  if (c.pattern.has_value() == c.circuit.has_value())
    throw ConfigError("config: give exactly one of \"pattern\" and \"circuit\"");
  const bool encrypted = c.protocol == ProtocolId::kChilds || c.protocol == ProtocolId::kChildsHidden;
  if (encrypted && !c.circuit) throw ConfigError("config.circuit: required for " + protocol);
  if (c.adversary != "honest" && c.protocol != ProtocolId::kUbqc && c.protocol != ProtocolId::kTwoServer)
    throw ConfigError("config.adversary: only ubqc and two-server sessions take an adversary");
  if (c.traps > 0 && c.protocol != ProtocolId::kUbqc) throw ConfigError("config.traps: ubqc only");
  if (!(c.test_fraction >= 0.0 && c.test_fraction <= 1.0))
    throw ConfigError("config.test_fraction: must lie in [0, 1]");
  if (c.test_fraction > 0 && c.protocol != ProtocolId::kClientMeasuring)
    throw ConfigError("config.test_fraction: client-measuring only");
  if (c.audit != AuditMode::kNone) {
    if (c.protocol != ProtocolId::kUbqc && c.protocol != ProtocolId::kTwoServer)
      throw ConfigError("config.audit: ubqc and two-server only");
    if (!c.audit_against) throw ConfigError("config.audit_against: required when auditing");
  } else if (c.audit_against) {
    throw ConfigError("config.audit_against: set without an audit mode");
  }
  return c;
}

std::string config_to_json(const ExperimentConfig& c) {
  json doc = {{"format", kConfigFormat},
              {"protocol", std::string(protocol_name(c.protocol))},
              {"seed", c.seed},
              {"trials", c.trials},
              {"adversary", c.adversary},
              {"traps", c.traps},
              {"test_fraction", c.test_fraction},
              {"audit", std::string(audit_mode_name(c.audit))},
              {"transcripts", c.transcripts}};
  if (c.pattern) doc["pattern"] = *c.pattern;
  if (c.circuit) doc["circuit"] = *c.circuit;
  if (c.audit_against) doc["audit_against"] = *c.audit_against;
  return doc.dump(1) + "\n";
}

std::string verdict_to_json(const VerdictReport& v) {
  json failures = json::array();
  for (const auto& f : v.failures)
    failures.push_back({{"vertex", f.vertex}, {"expected", f.expected}, {"observed", f.observed}});
  json doc = {{"accepted", v.accepted}, {"traps_checked", v.traps_checked}, {"failures", std::move(failures)}};
  if (v.estimate) {
    doc["estimate"] = {{"trials", v.estimate->trials},
                       {"rejections", v.estimate->rejections},
                       {"rate", v.estimate->rate},
                       {"wilson95", {v.estimate->wilson.lo, v.estimate->wilson.hi}}};
  }
  return doc.dump(1) + "\n";
}

std::string to_hex(std::span<const std::uint8_t> bytes) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (std::uint8_t b : bytes) {
    out.push_back(kDigits[b >> 4]);
    out.push_back(kDigits[b & 15]);
  }
  return out;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot write " + path.string());
  out << text;
  if (!out) throw ConfigError("write failed for " + path.string());
}

}  // namespace bqc
