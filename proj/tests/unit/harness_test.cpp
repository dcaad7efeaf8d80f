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


#include <gtest/gtest.h>

#include <filesystem>
#include <string>
#include <vector>

#include "json.hpp"

#include "bqc/errors.hpp"
#include "bqc/harness/channel.hpp"
#include "bqc/harness/experiment.hpp"
#include "bqc/harness/json_io.hpp"
#include "bqc/harness/transcript.hpp"
#include "bqc/harness/wire.hpp"
#include "bqc/mbqc/compiler.hpp"
#include "bqc/quantum/random.hpp"

namespace bqc {
namespace {

std::vector<Message> sample_messages() {
  return {QubitPayload{3, 0x1122334455667788ULL}, AngleMsg{7, Angle8(5)}, OutcomeMsg{2, 1}, MeasureZ{9},
          GraphDecl{4, 13},                       GateRequest{GateKind::kCNOT}, DebugSecret{{1, 2, 3, 0xff}}};
}

TEST(Wire, EveryMessageKindRoundTrips) {
  for (const Message& m : sample_messages()) {
    const Bytes body = encode_body(m);
    EXPECT_EQ(decode_body(kind_of(m), body), m) << describe(m);
  }
}

TEST(Wire, RecordsRoundTripAndAreLittleEndian) {
  ByteWriter w;
  w.u32(0x01020304);
  EXPECT_EQ(w.bytes(), (Bytes{4, 3, 2, 1}));
  ByteWriter rec;
  write_record(rec, 42, Party::kServer2, Party::kClient, OutcomeMsg{5, 1});
  ByteReader r(rec.bytes());
  const Record got = read_record(r);
  EXPECT_EQ(got.seq, 42u);
  EXPECT_EQ(got.from, Party::kServer2);
  EXPECT_EQ(got.to, Party::kClient);
  EXPECT_EQ(got.message, Message(OutcomeMsg{5, 1}));
  EXPECT_EQ(r.remaining(), 0u);
}

TEST(Wire, TruncationAndBadValuesThrow) {
  ByteWriter rec;
  write_record(rec, 1, Party::kClient, Party::kServer, AngleMsg{1, Angle8(3)});
  Bytes b = rec.take();
  b.pop_back();
  ByteReader r(b);
  EXPECT_THROW(read_record(r), InvalidArgument);
  EXPECT_THROW(decode_body(MessageKind::kAngle, Bytes{1, 0, 0, 0, 9}), InvalidArgument);
  EXPECT_THROW(parse_direction(0x33), InvalidArgument);
}

TEST(Transcript, SerializeParseRoundTrip) {
  Transcript t(SessionInfo{ProtocolId::kTwoServer, 2, 5, 99});
  Party from = Party::kClient, to = Party::kServer;
  for (const Message& m : sample_messages()) {
    t.append(from, to, m);
    std::swap(from, to);
  }
  const Bytes bytes = t.serialize();
  EXPECT_EQ(Transcript::parse(bytes), t);
  EXPECT_EQ(t.count(Party::kClient, Party::kServer), 4u);
  Bytes bad = bytes;
  bad[0] ^= 0xff;
  EXPECT_THROW(Transcript::parse(bad), InvalidArgument);
}

TEST(Transcript, ScanFindsLeakedSecrets) {
  SecretSet secrets;
  secrets.add("theta", 4, 6);
  Transcript clean(SessionInfo{ProtocolId::kUbqc, 1, 2, 0});
  clean.append(Party::kClient, Party::kServer, AngleMsg{0, Angle8(6)});
  EXPECT_TRUE(transcript_scan(clean, secrets));

  Transcript leaky = clean;
  leaky.append(Party::kClient, Party::kServer, DebugSecret{secret_token("theta", 4, 6)});
  EXPECT_FALSE(transcript_scan(leaky, secrets));
  // Any debug payload counts as a leak, even one no secret matches.
  Transcript debug = clean;
  debug.append(Party::kClient, Party::kServer, DebugSecret{{0}});
  EXPECT_FALSE(transcript_scan(debug, SecretSet{}));
}

TEST(Channel, ServersCannotTalkToEachOther) {
  Channel ch(SessionInfo{ProtocolId::kTwoServer, 1, 2, 0});
  ch.send(Party::kClient, Party::kServer, GraphDecl{1, 2});
  EXPECT_THROW(ch.send(Party::kServer, Party::kServer2, AngleMsg{0, {}}), ProtocolError);
  EXPECT_THROW(ch.send(Party::kServer2, Party::kServer, AngleMsg{0, {}}), ProtocolError);
  EXPECT_THROW(ch.send(Party::kClient, Party::kClient, AngleMsg{0, {}}), ProtocolError);
  Channel single(SessionInfo{ProtocolId::kUbqc, 1, 2, 0});
  EXPECT_THROW(single.send(Party::kClient, Party::kServer2, GraphDecl{1, 2}), ProtocolError);
}

TEST(Channel, UbqcOrderingIsEnforced) {
  Channel ch(SessionInfo{ProtocolId::kUbqc, 1, 2, 0});
  EXPECT_THROW(ch.send(Party::kClient, Party::kServer, AngleMsg{0, {}}), ProtocolError);
  Channel wrong_dims(SessionInfo{ProtocolId::kUbqc, 1, 2, 0});
  EXPECT_THROW(wrong_dims.send(Party::kClient, Party::kServer, GraphDecl{2, 2}), ProtocolError);
  Channel skip(SessionInfo{ProtocolId::kUbqc, 1, 2, 0});
  skip.send(Party::kClient, Party::kServer, GraphDecl{1, 2});
  EXPECT_THROW(skip.send(Party::kClient, Party::kServer, QubitPayload{1, 0}), ProtocolError);
}

TEST(Channel, CloseRequiresACompleteSession) {
  Channel ch(SessionInfo{ProtocolId::kClientMeasuring, 1, 1, 0});
  ch.send(Party::kClient, Party::kServer, GraphDecl{1, 1});
  EXPECT_THROW(ch.close(), ProtocolError);  // undelivered declaration
  ch.recv(Party::kServer);
  EXPECT_THROW(ch.recv(Party::kServer), ProtocolError);
  const QubitId q = ch.world().add(StateVector::plus(1));
  ch.send(Party::kServer, Party::kClient, QubitPayload{0, ch.registry().deposit(q)});
  const Message m = ch.recv(Party::kClient);
  EXPECT_THROW(ch.close(), ProtocolError);  // reference never resolved
  const std::uint64_t ref = std::get<QubitPayload>(m).ref;
  EXPECT_EQ(ch.registry().resolve(ref), q);
  EXPECT_THROW(ch.registry().resolve(ref), ProtocolError);
  EXPECT_NO_THROW(ch.close());
  EXPECT_EQ(ch.transcript().entries().size(), 2u);
}

TEST(Channel, ChildsRoundsCheckArity) {
  Channel ch(SessionInfo{ProtocolId::kChilds, 0, 0, 0});
  ch.send(Party::kClient, Party::kServer, QubitPayload{0, 0});
  EXPECT_THROW(ch.send(Party::kClient, Party::kServer, GateRequest{GateKind::kCNOT}), ProtocolError);
}

TEST(Json, PatternAndCircuitRoundTrip) {
  const Circuit c{2, {Gate::h(0), Gate::cnot(0, 1), Gate::rz(1, Angle8(3)), Gate::t(1)}};
  EXPECT_EQ(circuit_from_json(circuit_to_json(c)), c);
  const MeasurementPattern p = compile_circuit(c);
  EXPECT_EQ(pattern_from_json(pattern_to_json(p)), p);
}

TEST(Json, ConfigRoundTrip) {
  ExperimentConfig cfg;
  cfg.protocol = ProtocolId::kUbqc;
  cfg.pattern = "a.json";
  cfg.seed = 7;
  cfg.trials = 3;
  cfg.adversary = "flip:1,2";
  cfg.traps = 2;
  cfg.audit = AuditMode::kSampled;
  cfg.audit_against = "b.json";
  cfg.transcripts = true;
  EXPECT_EQ(config_from_json(config_to_json(cfg)), cfg);
}

TEST(Json, UnknownKeysAndBadValuesAreRejectedWithAPath) {
  const Circuit c{1, {Gate::h(0)}};
  auto doc = nlohmann::json::parse(circuit_to_json(c));
  doc["colour"] = "blue";
  try {
    circuit_from_json(doc.dump());
    FAIL() << "accepted an unknown key";
  } catch (const ConfigError& e) {
    EXPECT_NE(std::string(e.what()).find("colour"), std::string::npos) << e.what();
  }
  doc.erase("colour");
  doc["gates"][0]["gate"] = "h";
  EXPECT_THROW(circuit_from_json(doc.dump()), ConfigError);
  doc["format"] = "bqc-circuit/2";
  EXPECT_THROW(circuit_from_json(doc.dump()), ConfigError);
  EXPECT_THROW(circuit_from_json("{not json"), ConfigError);
}

TEST(Json, ConfigCrossFieldChecks) {
  ExperimentConfig base;
  base.pattern = "p.json";
  auto doc = nlohmann::json::parse(config_to_json(base));
  doc["trials"] = 0;
  EXPECT_THROW(config_from_json(doc.dump()), ConfigError);
  doc = nlohmann::json::parse(config_to_json(base));
  doc["circuit"] = "c.json";
  EXPECT_THROW(config_from_json(doc.dump()), ConfigError);
  doc = nlohmann::json::parse(config_to_json(base));
  doc["protocol"] = "client-measuring";
  doc["traps"] = 1;
  EXPECT_THROW(config_from_json(doc.dump()), ConfigError);
  doc = nlohmann::json::parse(config_to_json(base));
  doc["audit"] = "exact";
  EXPECT_THROW(config_from_json(doc.dump()), ConfigError);
}

class ExperimentTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("bqc_experiment_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    std::filesystem::create_directories(dir_);
    write_text_file(dir_ / "c.json", circuit_to_json(Circuit{1, {Gate::h(0), Gate::t(0)}}));
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }
  std::filesystem::path dir_;
};

TEST_F(ExperimentTest, SameSeedSameReport) {
  ExperimentConfig cfg;
  cfg.protocol = ProtocolId::kUbqc;
  cfg.circuit = "c.json";
  cfg.seed = 11;
  cfg.trials = 4;
  cfg.traps = 1;
  cfg.transcripts = true;
  const ExperimentResult a = run_experiment(cfg, dir_), b = run_experiment(cfg, dir_);
  EXPECT_EQ(a.report, b.report);
  EXPECT_TRUE(a.accepted);
  const auto doc = nlohmann::json::parse(a.report);
  EXPECT_EQ(doc["format"], std::string(kReportFormat));
  cfg.seed = 12;
  EXPECT_NE(run_experiment(cfg, dir_).report, a.report);
}

TEST_F(ExperimentTest, CheatingServerIsRejected) {
  ExperimentConfig cfg;
  cfg.protocol = ProtocolId::kUbqc;
  cfg.circuit = "c.json";
  cfg.trials = 5;
  cfg.traps = 1;
  cfg.adversary = "flip-all";
  EXPECT_FALSE(run_experiment(cfg, dir_).accepted);
}

TEST_F(ExperimentTest, MissingFileIsAConfigError) {
  ExperimentConfig cfg;
  cfg.circuit = "missing.json";
  EXPECT_THROW(run_experiment(cfg, dir_), ConfigError);
}

}  // namespace
}  // namespace bqc
