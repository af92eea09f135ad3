#include <gtest/gtest.h>

#include "bckcode/axioms.hpp"
#include "bckcode/construction.hpp"
#include "support/fixtures.hpp"

using namespace bck;
using fixtures::make_code;

namespace {

std::vector<std::string> words_of(const BlockCode& code) {
  std::vector<std::string> out;
  for (const Codeword& w : code.words()) out.push_back(to_string(w));
  return out;
}

}  // namespace

TEST(Dimension, BothCases) {
  EXPECT_EQ(dimension(fixtures::code("n7_q4_m3.code")),
            (ConstructionParams{ConstructionCase::kShortWords, 9, 6, 3}));
  EXPECT_EQ(dimension(fixtures::code("n4_q5_m3.code")),
            (ConstructionParams{ConstructionCase::kLongWords, 9, 6, 3}));
  EXPECT_EQ(dimension(fixtures::code("n4_q5_m5.code")),
            (ConstructionParams{ConstructionCase::kLongWords, 11, 6, 5}));
  EXPECT_EQ(dimension(fixtures::code("toy.code")), (ConstructionParams{ConstructionCase::kShortWords, 3, 2, 1}));
  EXPECT_EQ(dimension(fixtures::code("n7_q4_m3.code")).row_of_word(1), 6u);
}

TEST(Dimension, RefusesUnconstructibleCodes) {
  try {
    (void)dimension(make_code(4, {"321"}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kInadmissibleCode);
  }
  EXPECT_THROW((void)dimension(BlockCode(Alphabet(5), 3, {})), Error);
}

TEST(BuildMatrix, MatchesWorkedMatricesBitForBit) {
  for (const char* stem : {"n7_q4_m3", "n4_q5_m3", "n4_q5_m5"}) {
    const AssociatedMatrix m = build_matrix(fixtures::code(std::string(stem) + ".code"));
    EXPECT_EQ(m.table(), fixtures::table(std::string(stem) + ".table")) << stem;
  }
}

TEST(BuildMatrix, ToyCode) {
  const AssociatedMatrix m = build_matrix(fixtures::code("toy.code"));
  EXPECT_EQ(m.table(), CayleyTable::from_rows({{0, 0, 0}, {1, 0, 0}, {2, 1, 0}}));
  EXPECT_EQ(m.entry(2, 1), 1u);
}

TEST(BuildMatrix, LayoutInvariants) {
  oracle::AdmissibleCodeSampler sampler({3, 7}, {2, 6}, {1, 5}, 5);
  for (int i = 0; i < 100; ++i) {
    const BlockCode code = fixtures::from_random(sampler.next());
    const AssociatedMatrix m = build_matrix(code);
    const auto& p = m.params();
    for (Element s = 0; s < p.size; ++s) {
      EXPECT_EQ(m.entry(0, s), 0u);
      EXPECT_EQ(m.entry(s, 0), s);
      for (Element t = s; t < p.size; ++t) EXPECT_EQ(m.entry(s, t), 0u);
    }
    for (std::size_t w = 1; w <= p.words; ++w)
      for (std::size_t t = 1; t <= code.length(); ++t)
        EXPECT_EQ(m.entry(p.row_of_word(w), t), code.word(w).at(t));
  }
}

TEST(BuildAlgebra, AdmissibleExamplesAreBck) {
  EXPECT_TRUE(check_bck(build_algebra(fixtures::code("n7_q4_m3.code"))).verdict);
  EXPECT_TRUE(check_bck(build_algebra(fixtures::code("n4_q5_m3.code"))).verdict);
}

TEST(BuildAlgebra, N4Q5M5IsRejectedWithReport) {
  try {
    (void)build_algebra(fixtures::code("n4_q5_m5.code"));
    FAIL();
  } catch (const ConstructionError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kNotBck);
    ASSERT_FALSE(e.report().violations.empty());
    EXPECT_EQ(e.report().violations.front(), (Violation{Axiom::kBci1, {8, 0, 2}}));
  }
}

TEST(BuildAlgebra, AdmissibleButNotDominatingCanFail) {
  // Lexicographically ascending, every word admissible, but 42211 drops
  // below 33111 at position 2.
  const BlockCode code = make_code(5, {"33111", "42211"});
  ASSERT_TRUE(validate_admissible(code).admissible);
  try {
    (void)build_algebra(code);
    FAIL();
  } catch (const ConstructionError& e) {
    EXPECT_EQ(e.report().violations.front(), (Violation{Axiom::kBci1, {6, 2, 7}}));
  }
}

TEST(CutCodeword, FourElement) {
  const CayleyTable t = fixtures::table("four_element.table");
  const EvaluationMap all({0, 1, 2, 3});
  EXPECT_EQ(to_string(cut_codeword(t, 1, all)), "1001");
  EXPECT_EQ(to_string(cut_codeword(t, 0, all)), "0000");
  EXPECT_EQ(to_string(cut_codeword(t, 3, all)), "3330");
  EXPECT_THROW((void)cut_codeword(t, 4, all), Error);
  EXPECT_THROW((void)cut_codeword(t, 1, EvaluationMap({7})), Error);
  EXPECT_THROW(EvaluationMap({}), Error);
}

TEST(CutCodeword, N7Q4M3Element8) {
  const CayleyTable t = fixtures::table("n7_q4_m3.table");
  EXPECT_EQ(to_string(cut_codeword(t, 8, EvaluationMap::first_elements(4))), "4321");
}

TEST(GenerateCode, WorkedExamples) {
  EXPECT_EQ(words_of(generate_code(fixtures::table("n7_q4_m3.table"), EvaluationMap::first_elements(4))),
            (std::vector<std::string>{"0000", "1000", "1100", "1110", "1111", "3211", "4221", "4321"}));
  EXPECT_EQ(words_of(generate_code(fixtures::table("n4_q5_m3.table"), EvaluationMap::first_elements(5))),
            (std::vector<std::string>{"00000", "10000", "11000", "11100", "11110", "21111", "32111", "33111"}));
  EXPECT_EQ(words_of(generate_code(fixtures::table("n4_q5_m5.table"), EvaluationMap::first_elements(5))),
            (std::vector<std::string>{"00000", "10000", "11000", "11100", "11110", "11111", "21111", "31111",
                                      "32111", "33111"}));
}

TEST(GenerateCode, VariantTableDiffersFromMatrix) {
  // That table has 2 at (7,3) where the matrix has 1; it yields 32211.
  const CayleyTable variant = fixtures::table("n4_q5_m3_variant.table");
  const BlockCode code = generate_code(variant, EvaluationMap::first_elements(5));
  EXPECT_TRUE(code.contains(parse_codeword("32211")));
  EXPECT_FALSE(code.contains(parse_codeword("32111")));
  EXPECT_FALSE(check_bck(variant).verdict);
}

TEST(GenerateCode, TrivialTable) {
  const BlockCode code = generate_code(CayleyTable::trivial(), EvaluationMap({0}));
  EXPECT_EQ(words_of(code), (std::vector<std::string>{"0"}));
}

TEST(Roundtrip, WorkedExamplesContained) {
  for (const char* name : {"n7_q4_m3.code", "n4_q5_m3.code", "toy.code"}) {
    const RoundtripReport report = roundtrip_check(fixtures::code(name));
    EXPECT_TRUE(report.bck.verdict) << name;
    EXPECT_TRUE(report.contained()) << name;
  }
}

TEST(Roundtrip, N4Q5M5ContainedButNotBck) {
  const RoundtripReport report = roundtrip_check(fixtures::code("n4_q5_m5.code"));
  EXPECT_FALSE(report.bck.verdict);
  EXPECT_TRUE(report.contained());
}

TEST(Roundtrip, ExplicitPointsCanLoseWords) {
  const RoundtripReport report =
      roundtrip_check(fixtures::code("n7_q4_m3.code"), EvaluationMap({1, 2}));
  EXPECT_FALSE(report.contained());
}

TEST(Roundtrip, RandomAdmissibleCodesAreContained) {
  oracle::AdmissibleCodeSampler sampler({3, 7}, {2, 6}, {1, 5}, 2024);
  for (int i = 0; i < 200; ++i) {
    const auto rc = sampler.next();
    const RoundtripReport report = roundtrip_check(fixtures::from_random(rc));
    EXPECT_TRUE(report.contained());
    // Independent check of the BCK verdict.
    EXPECT_EQ(report.bck.verdict, oracle::is_bck(fixtures::to_grid(report.table)));
  }
}

TEST(Roundtrip, DominatingAdmissibleCodesAreBck) {
  oracle::AdmissibleCodeSampler sampler({3, 7}, {2, 6}, {1, 5}, 77);
  int checked = 0;
  for (int i = 0; i < 400; ++i) {
    const auto rc = sampler.next();
    if (!oracle::componentwise_ascending(rc.words)) continue;
    ++checked;
    EXPECT_NO_THROW((void)build_algebra(fixtures::from_random(rc)));
  }
  EXPECT_GT(checked, 100);
}
