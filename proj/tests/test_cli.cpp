#include <gtest/gtest.h>

#include <sstream>

#include <json.hpp>

#include "bckcode/cli.hpp"
#include "support/fixtures.hpp"

using fixtures::data_path;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;

  nlohmann::json json() const { return nlohmann::json::parse(out); }
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "bckcode");
  std::ostringstream out, err;
  const int code = bck::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, ValidateExitCodes) {
  EXPECT_EQ(run({"validate", data_path("n7_q4_m3.code")}).code, 0);
  const Result bad = run({"validate", data_path("nonincreasing_violation.code")});
  EXPECT_EQ(bad.code, 1);
  EXPECT_NE(bad.out.find("R2 word 1 position 2"), std::string::npos) << bad.out;
  EXPECT_EQ(run({"validate", data_path("short_body.code")}).code, 2);
  EXPECT_EQ(run({"validate", data_path("missing.code")}).code, 2);
}

TEST(Cli, ValidateJson) {
  const Result r = run({"validate", data_path("n4_q5_m5.code"), "--format", "json"});
  EXPECT_EQ(r.code, 1);
  const auto doc = r.json();
  EXPECT_EQ(doc["command"], "validate");
  EXPECT_EQ(doc["exit_code"], 1);
  EXPECT_EQ(doc["validation"]["admissible"], false);
  EXPECT_EQ(doc["validation"]["failures"][0]["rule"], "R3");
  EXPECT_EQ(doc["validation"]["failures"][0]["word"], 3);
  EXPECT_EQ(doc["code"]["n"], 4);
  EXPECT_EQ(doc["code"]["q"], 5);
  EXPECT_EQ(doc["code"]["m"], 5);
}

TEST(Cli, ParseErrorInJsonHasErrorField) {
  const Result r = run({"validate", data_path("short_body.code"), "--format", "json"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.json()["error"].get<std::string>().find("found 2"), std::string::npos);
}

TEST(Cli, BuildEmitsMatrixThatVerifies) {
  const Result r = run({"build", data_path("n7_q4_m3.code")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(bck::parse_table_file(r.out).table, fixtures::table("n7_q4_m3.table"));
  const Result t = run({"build", data_path("n7_q4_m3.code"), "--emit", "table"});
  EXPECT_NE(t.out.find("a_8"), std::string::npos);
}

TEST(Cli, BuildRefusesInadmissibleUnlessForced) {
  const Result plain = run({"build", data_path("n4_q5_m5.code")});
  EXPECT_EQ(plain.code, 1);
  EXPECT_TRUE(plain.out.empty());
  const Result forced = run({"build", data_path("n4_q5_m5.code"), "--force", "--format", "json"});
  EXPECT_EQ(forced.code, 1);
  const auto doc = forced.json();
  EXPECT_EQ(doc["bck"]["verdict"], false);
  EXPECT_EQ(doc["params"]["r"], 11);
  EXPECT_EQ(doc["params"]["case"], "q>=n");
  EXPECT_EQ(doc["matrix"].size(), 11u);
}

TEST(Cli, VerifyAndProperties) {
  EXPECT_EQ(run({"verify", data_path("four_element.table")}).code, 0);
  EXPECT_EQ(run({"verify", data_path("four_element.table"), "--axioms", "bck-alt"}).code, 0);
  EXPECT_EQ(run({"verify", data_path("diagonal_violation.table")}).code, 1);
  EXPECT_EQ(run({"verify", data_path("n4_q5_m5.table"), "--axioms", "bci"}).code, 1);

  const Result r = run({"verify", data_path("n7_q4_m3.table"), "--properties", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  const auto props = r.json()["properties"];
  EXPECT_EQ(props["commutative"]["holds"], false);
  EXPECT_EQ(props["commutative"]["witness"], (std::vector<int>{2, 3}));
  EXPECT_EQ(props["implicative"]["witness"], (std::vector<int>{1, 2}));
  EXPECT_EQ(props["positive_implicative"]["witness"], (std::vector<int>{2, 1, 1}));
  EXPECT_EQ(props["order"]["antisymmetric"], true);

  const Result text = run({"verify", data_path("four_element.table"), "--properties"});
  EXPECT_NE(text.out.find("commutative: true"), std::string::npos) << text.out;
  EXPECT_NE(text.out.find("implicative: false, fails at (1,2) = (a,b)"), std::string::npos) << text.out;
}

TEST(Cli, DiagonalViolationNamesAxiom) {
  const Result r = run({"verify", data_path("diagonal_violation.table"), "--format", "json"});
  const auto doc = r.json();
  bool named = false;
  for (const auto& v : doc["report"]["violations"]) named = named || v["axiom"] == "BCI-3";
  EXPECT_TRUE(named) << r.out;
}

TEST(Cli, Generate) {
  const Result r = run({"generate", data_path("n7_q4_m3.table"), "--points", "1,2,3,4", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.json()["code"]["words"],
            (std::vector<std::string>{"0000", "1000", "1100", "1110", "1111", "3211", "4221", "4321"}));
  EXPECT_EQ(run({"generate", data_path("n7_q4_m3.table"), "--points", "1,x"}).code, 2);
  EXPECT_EQ(run({"generate", data_path("n7_q4_m3.table"), "--points", "1,9"}).code, 2);
  EXPECT_EQ(run({"generate", data_path("n7_q4_m3.table")}).code, 2);
}

TEST(Cli, RoundtripStages) {
  EXPECT_EQ(run({"roundtrip", data_path("n7_q4_m3.code")}).code, 0);
  EXPECT_EQ(run({"roundtrip", data_path("n4_q5_m3.code")}).code, 0);
  const Result r = run({"roundtrip", data_path("n4_q5_m5.code"), "--format", "json"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.json()["stage_failed"], "validate");
  const Result lost = run({"roundtrip", data_path("n7_q4_m3.code"), "--points", "1,2", "--format", "json"});
  EXPECT_EQ(lost.code, 1);
  EXPECT_EQ(lost.json()["stage_failed"], "containment");
}

TEST(Cli, Ideals) {
  EXPECT_EQ(run({"ideals", data_path("four_element.table"), "--subset", "0,3"}).code, 0);
  const Result bad = run({"ideals", data_path("four_element.table"), "--subset", "0,2"});
  EXPECT_EQ(bad.code, 1);
  EXPECT_NE(bad.out.find("b * a = a"), std::string::npos) << bad.out;

  const Result all = run({"ideals", data_path("n7_q4_m3.table"), "--enumerate", "--format", "json"});
  EXPECT_EQ(all.code, 0);
  EXPECT_EQ(all.json()["closed_right_ideals"].size(), 35u);

  const Result cand = run({"ideals", data_path("n7_q4_m3.table"), "--candidate", "3", "--format", "json"});
  EXPECT_EQ(cand.code, 1);
  const auto doc = cand.json();
  EXPECT_EQ(doc["reading"], "literal-index");
  EXPECT_EQ(doc["status"], "unresolved-ambiguity");
  EXPECT_EQ(doc["result"]["subset"], (std::vector<int>{0, 1, 6, 7, 8}));
  EXPECT_EQ(doc["result"]["witnesses"][0]["x"], 6);

  EXPECT_EQ(run({"ideals", data_path("four_element.table")}).code, 2);
  EXPECT_EQ(run({"ideals", data_path("four_element.table"), "--enumerate", "--subset", "0"}).code, 2);
  EXPECT_EQ(run({"ideals", data_path("four_element.table"), "--candidate", "4"}).code, 2);
  EXPECT_EQ(run({"ideals", data_path("four_element.table"), "--subset", "0,7"}).code, 2);
}

TEST(Cli, Iso) {
  EXPECT_EQ(run({"iso", data_path("n7_q4_m3.table"), data_path("n7_q4_m3.table")}).code, 0);
  EXPECT_EQ(run({"iso", data_path("n7_q4_m3.table"), data_path("n4_q5_m3.table")}).code, 1);
  EXPECT_EQ(run({"iso", data_path("n4_q5_m5.table"), data_path("n4_q5_m5.table")}).code, 2);
  EXPECT_EQ(run({"iso", data_path("n4_q5_m5.table"), data_path("n4_q5_m5.table"), "--max-size", "11"}).code, 0);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"verify", data_path("four_element.table"), "--format", "yaml"}).code, 2);
  EXPECT_EQ(run({"verify", data_path("four_element.table"), "--axioms", "bcz"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}
