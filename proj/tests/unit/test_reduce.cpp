#include "oracle.hpp"
#include "repsq/reduce.hpp"

#include <gtest/gtest.h>

#include <map>

using repsq::CaseFamily;
using Stage = repsq::FamilyFate::Stage;

namespace {

const repsq::ReductionReport& report() {
  static const auto rep = repsq::reduce_all();
  return rep;
}

}  // namespace

TEST(Reduce, LengthBoundAndSums) {
  EXPECT_EQ(report().global_length_bound, 6);
  EXPECT_EQ(report().admissible_sums, (std::vector<int>{4, 11, 16}));
}

TEST(Reduce, SevenSurvivors) {
  EXPECT_EQ(report().survivors, repsq::expected_survivors());
  EXPECT_EQ(report().survivors.size(), 7u);
}

TEST(Reduce, FunnelVerdictsMatchBruteForce) {
  std::map<std::uint64_t, bool> verdicts;
  for (const auto& v : report().funnel_verdicts) verdicts[v.scaled_residue] = v.quadratic_residue;
  for (std::uint64_t r : {96, 296, 1996, 2996}) {
    ASSERT_TRUE(verdicts.count(r)) << r;
    EXPECT_FALSE(verdicts[r]) << r;
  }
  for (std::uint64_t r : {889, 789, 689, 589, 489, 389, 289, 189}) {
    ASSERT_TRUE(verdicts.count(r)) << r;
    EXPECT_EQ(verdicts[r], oracle::is_qr(static_cast<std::int64_t>(r), 1'000'000)) << r;
  }
  for (const auto& [r, qr] : verdicts) EXPECT_EQ(qr, oracle::is_qr(static_cast<std::int64_t>(r), 1'000'000)) << r;
}

TEST(Reduce, EveryFamilyHasAFate) {
  std::size_t survivors = 0;
  for (const auto& fate : report().fates) {
    EXPECT_FALSE(fate.reason.empty()) << fate.family.label();
    survivors += fate.stage == Stage::Survives;
    if (fate.stage == Stage::SquareFactor) {
      ASSERT_TRUE(fate.reduced_to.has_value());
    }
  }
  EXPECT_EQ(survivors, 7u);
}

TEST(Reduce, RepairEliminatesBothFamilies) {
  bool saw_sevens = false, saw_nines = false;
  for (const auto& fate : report().fates) {
    if (fate.family == CaseFamily{7, 9, 4}) {
      saw_sevens = true;
      EXPECT_EQ(fate.stage, Stage::Repair);
      EXPECT_EQ(fate.modulus.value_or(0), 7u);
    }
    if (fate.family == CaseFamily{9, 7, 5}) {
      saw_nines = true;
      EXPECT_EQ(fate.stage, Stage::Repair);
      EXPECT_EQ(fate.modulus.value_or(0), 9u);
    }
  }
  EXPECT_TRUE(saw_sevens);
  EXPECT_TRUE(saw_nines);
}

// Families removed by the funnel never produce a square in a direct scan.
TEST(Reduce, EliminatedFamiliesHaveNoSmallSquares) {
  for (const auto& fate : report().fates) {
    if (fate.stage != Stage::FunnelResidue && fate.stage != Stage::Repair) continue;
    for (int m = fate.family.m_min; m < 40; ++m)
      ASSERT_FALSE(oracle::is_square(oracle::repdigit(fate.family.a, m) + oracle::repdigit(fate.family.b, fate.family.n)))
          << fate.family.label() << " m=" << m;
  }
}
