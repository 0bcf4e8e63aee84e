#include "oracle.hpp"
#include "repsq/residue.hpp"

#include <gtest/gtest.h>

#include <map>
#include <numeric>

using repsq::ResidueStructure;

TEST(SquaresMod, SmallModuli) {
  EXPECT_EQ(repsq::squares_mod(7).members(), (std::vector<std::uint64_t>{0, 1, 2, 4}));
  EXPECT_EQ(repsq::squares_mod(9).members(), (std::vector<std::uint64_t>{0, 1, 4, 7}));
}

TEST(SquaresMod, MatchesFullEnumerationUpTo1000) {
  for (std::uint64_t M = 2; M <= 1000; ++M) {
    const auto expected = oracle::squares_mod(M);
    const auto sq = repsq::squares_mod(M);
    ASSERT_EQ(sq.size(), expected.size()) << M;
    for (std::uint64_t t = 0; t < M; ++t) ASSERT_EQ(sq.contains(t), expected.count(t) == 1) << M << " " << t;
  }
}

TEST(SquaresMod, InvariantUnderUnitSquares) {
  for (std::uint64_t M : {7ull, 16ull, 45ull, 100ull, 1000ull, 9973ull}) {
    const auto sq = repsq::squares_mod(M);
    for (std::uint64_t u = 1; u < M; u += 3) {
      if (std::gcd(u, M) != 1) continue;
      for (std::uint64_t r : sq.members()) ASSERT_TRUE(sq.contains(r * (u * u % M) % M));
    }
  }
}

TEST(SquaresMod, MillionModulus) {
  const auto sq = repsq::squares_mod_cached(1'000'000);
  EXPECT_FALSE(sq.contains(96));
  EXPECT_TRUE(sq.contains(699984));
  EXPECT_FALSE(sq.contains_signed(-16));
}

TEST(SquaresMod, RejectsModulusAboveCeiling) {
  EXPECT_THROW(repsq::squares_mod(1'000'001, 1'000'000), repsq::BoundError);
  EXPECT_THROW(repsq::table_a(8), repsq::BoundError);
}

TEST(TableA, ColumnStructure) {
  const auto t = repsq::table_a();
  EXPECT_EQ(t.first_all_x_exponent(), 6);
  EXPECT_EQ(t.first_x_exponent(4), 4);
  EXPECT_EQ(t.first_x_exponent(11), 3);
  EXPECT_EQ(t.first_x_exponent(16), 6);
  EXPECT_EQ(t.first_x_exponent(2), 2);
  for (int s = 2; s <= 18; ++s)
    for (int k = 2; k <= 6; ++k) {
      std::uint64_t M = 1;
      for (int e = 0; e < k; ++e) M *= 10;
      if (k <= 4) ASSERT_EQ(t.at(s, k), oracle::is_qr(-s, M)) << s << " " << k;
    }
}

TEST(PowerResidue, Examples) {
  EXPECT_EQ(repsq::power_residue_structure(1, 7), (ResidueStructure{0, 6}));
  EXPECT_EQ(repsq::power_residue_structure(2, 1'000'000), (ResidueStructure{6, 1}));
  EXPECT_EQ(repsq::power_residue_structure(9, 9), (ResidueStructure{0, 1}));
}

TEST(PowerResidue, MatchesExplicitSequence) {
  for (int base : {7, 10})
    for (std::uint64_t M = 2; M <= 400; ++M)
      for (int d = 1; d < base; ++d) {
        std::map<std::uint64_t, std::uint64_t> seen;
        std::uint64_t x = 0, m = 0;
        while (!seen.count(x)) {
          seen[x] = m++;
          x = (x * base + d) % M;
        }
        const ResidueStructure expected{seen[x], m - seen[x]};
        ASSERT_EQ(repsq::power_residue_structure(d, M, base), expected) << d << " mod " << M;
      }
}

TEST(PowerResidue, RepdigitModMatchesBigint) {
  for (std::uint64_t M : {7ull, 99ull, 1'000'000ull, 999'983ull})
    for (int d = 1; d <= 9; ++d)
      for (int len = 1; len < 60; len += 3) {
        const auto v = oracle::repdigit(d, len) % M;
        ASSERT_EQ(repsq::repdigit_mod(d, len, M), static_cast<std::uint64_t>(v));
      }
}
