#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "bckcode/axioms.hpp"
#include "bckcode/error.hpp"
#include "bckcode/isomorphism.hpp"
#include "support/fixtures.hpp"

using namespace bck;

namespace {

std::vector<Element> random_perm_fixing_zero(std::mt19937& rng, std::size_t r) {
  std::vector<Element> perm(r);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin() + 1, perm.end(), rng);
  return perm;
}

}  // namespace

TEST(Isomorphism, IdentityOnItself) {
  const CayleyTable t = fixtures::table("n7_q4_m3.table");
  const auto perm = are_isomorphic(t, t);
  ASSERT_TRUE(perm);
  EXPECT_TRUE(is_isomorphism(t, t, *perm));
  std::vector<Element> identity(t.size());
  std::iota(identity.begin(), identity.end(), 0);
  EXPECT_EQ(*perm, identity);  // the first candidate tried is the identity
}

TEST(Isomorphism, FindsRelabeledCopies) {
  std::mt19937 rng(11);
  for (const char* name : {"four_element.table", "n7_q4_m3.table", "n4_q5_m3.table", "n4_q5_m5.table"}) {
    const CayleyTable t = fixtures::table(name);
    for (int trial = 0; trial < 5; ++trial) {
      const CayleyTable copy = t.relabeled(random_perm_fixing_zero(rng, t.size()));
      const auto forward = are_isomorphic(t, copy, {11});
      const auto backward = are_isomorphic(copy, t, {11});
      ASSERT_TRUE(forward) << name;
      ASSERT_TRUE(backward) << name;
      EXPECT_TRUE(is_isomorphism(t, copy, *forward));
      EXPECT_TRUE(is_isomorphism(copy, t, *backward));
    }
  }
}

TEST(Isomorphism, ShortAndLongWordAlgebrasAreNotIsomorphic) {
  const CayleyTable a = fixtures::table("n7_q4_m3.table");
  const CayleyTable b = fixtures::table("n4_q5_m3.table");
  // Oracle: every one of the 8! permutations fixing 0.
  ASSERT_FALSE(oracle::brute_isomorphism(fixtures::to_grid(a), fixtures::to_grid(b)));
  EXPECT_FALSE(are_isomorphic(a, b));
  EXPECT_FALSE(are_isomorphic(b, a));
}

TEST(Isomorphism, SizeMismatchIsNotIsomorphicEvenAboveCap) {
  const CayleyTable a = fixtures::table("n4_q5_m5.table");
  EXPECT_FALSE(are_isomorphic(a, CayleyTable::trivial(), {2}));
}

TEST(Isomorphism, RefusesAboveCap) {
  const CayleyTable a = fixtures::table("n4_q5_m5.table");
  try {
    (void)are_isomorphic(a, a);
    FAIL() << "expected refusal at default cap 10";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kSearchRefused);
  }
  EXPECT_TRUE(are_isomorphic(a, a, {11}));
}

TEST(Isomorphism, MatchesBruteForceOnAllOrderThreeBckPairs) {
  std::vector<oracle::Grid> bck_tables;
  for (const auto& g : oracle::all_tables(3))
    if (oracle::is_bck(g)) bck_tables.push_back(g);
  for (const auto& ga : bck_tables) {
    for (const auto& gb : bck_tables) {
      const bool expected = oracle::brute_isomorphism(ga, gb).has_value();
      const CayleyTable a = fixtures::from_grid(ga), b = fixtures::from_grid(gb);
      const auto found = are_isomorphic(a, b);
      EXPECT_EQ(found.has_value(), expected);
      EXPECT_EQ(found.has_value(), are_isomorphic(b, a).has_value());
      if (found) {
        EXPECT_TRUE(is_isomorphism(a, b, *found));
      }
    }
  }
}

TEST(Isomorphism, MatchesBruteForceOnRandomMagmas) {
  // Random order-4 magmas with 0 forced to behave: many pairs are
  // non-isomorphic, some are relabelings.
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> pick(0, 3);
  for (int trial = 0; trial < 300; ++trial) {
    oracle::Grid g(4, std::vector<int>(4));
    for (auto& row : g)
      for (auto& e : row) e = pick(rng);
    const CayleyTable a = fixtures::from_grid(g);
    const CayleyTable b = trial % 2 ? a.relabeled(random_perm_fixing_zero(rng, 4))
                                    : fixtures::from_grid([&] {
                                        oracle::Grid h = g;
                                        h[pick(rng)][pick(rng)] = pick(rng);
                                        return h;
                                      }());
    const bool expected = oracle::brute_isomorphism(fixtures::to_grid(a), fixtures::to_grid(b)).has_value();
    const auto found = are_isomorphic(a, b);
    ASSERT_EQ(found.has_value(), expected) << "trial " << trial;
    if (found) {
      EXPECT_TRUE(is_isomorphism(a, b, *found));
    }
  }
}

TEST(Isomorphism, IsIsomorphismChecksEveryEntry) {
  const CayleyTable t = fixtures::table("four_element.table");
  EXPECT_FALSE(is_isomorphism(t, t, {0, 2, 1, 3}));
  EXPECT_FALSE(is_isomorphism(t, t, {1, 0, 2, 3}));
  EXPECT_FALSE(is_isomorphism(t, t, {0, 1, 1, 3}));
}
