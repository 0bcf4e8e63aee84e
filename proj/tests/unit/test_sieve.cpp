#include "oracle.hpp"
#include "repsq/reduce.hpp"
#include "repsq/sieve.hpp"

#include <gtest/gtest.h>

#include <random>

using repsq::CaseFamily;

namespace {

std::vector<bool> qr_table(std::uint64_t M) {
  std::vector<bool> t(M, false);
  for (std::uint64_t z = 0; z < M; ++z) t[z * z % M] = true;
  return t;
}

std::uint64_t value_mod(const CaseFamily& f, int m, std::uint64_t M) {
  const oracle::big v = oracle::repdigit(f.a, m) + oracle::repdigit(f.b, f.n);
  return static_cast<std::uint64_t>(v % M);
}

}  // namespace

TEST(CaseFamily, ValueAndLabel) {
  const CaseFamily f{8, 3, 2};
  EXPECT_EQ(f.label(), "8_m+33");
  EXPECT_EQ(f.value(6), 888888 + 33);
  EXPECT_EQ(repsq::parse_family("8+33"), f);
  EXPECT_EQ(repsq::parse_family("7+99999").n, 5);
  EXPECT_THROW(repsq::parse_family("8+34"), std::invalid_argument);
  EXPECT_THROW(repsq::parse_family("x"), std::invalid_argument);
}

TEST(Sieve, Mod7EliminatesSevensPlusFourNines) {
  const auto rep = repsq::sieve_family(CaseFamily{7, 9, 4}, 7);
  EXPECT_TRUE(rep.eliminates_all());
  // 7_m is 0 mod 7, so every m sees 9999 = 3 (mod 7), a non-residue.
  EXPECT_EQ(rep.period, 1u);
  EXPECT_EQ(rep.classes.at(0).residue, 3u);
}

TEST(Sieve, Mod9EliminatesNinesPlusFiveSevens) {
  EXPECT_TRUE(repsq::sieve_family(CaseFamily{9, 7, 5}, 9).eliminates_all());
  EXPECT_FALSE(repsq::sieve_family(CaseFamily{9, 7, 5}, 7).eliminates_all());
}

TEST(Sieve, MillionModulusLeavesTwoPlusNinetyNine) {
  const auto rep = repsq::sieve_family(CaseFamily{2, 9, 2}, 1'000'000);
  EXPECT_EQ(rep.period, 1u);
  ASSERT_EQ(rep.classes.size(), 1u);
  EXPECT_EQ(rep.classes[0].residue, 222321u);
  EXPECT_FALSE(rep.classes[0].eliminated);
}

// Every class verdict is checked against a_m + b_n computed from scratch for
// three full periods past m_min.
TEST(Sieve, SoundAgainstDirectEvaluation) {
  std::mt19937 rng(99);
  std::vector<CaseFamily> families = repsq::expected_survivors();
  for (int i = 0; i < 12; ++i) {
    const int n = 2 + static_cast<int>(rng() % 4);
    families.push_back(CaseFamily{1 + static_cast<int>(rng() % 9), 1 + static_cast<int>(rng() % 9), n});
  }
  for (std::uint64_t M : {7ull, 9ull, 11ull, 13ull, 16ull, 37ull, 64ull, 101ull, 1000ull, 4096ull}) {
    const auto qr = qr_table(M);
    for (const auto& f : families) {
      const auto rep = repsq::sieve_family(f, M);
      const auto last = static_cast<int>(rep.start() + 3 * rep.period);
      for (int m = f.m_min; m <= last; ++m) {
        const auto v = value_mod(f, m, M);
        ASSERT_EQ(rep.residue_at(m), v) << f.label() << " M=" << M << " m=" << m;
        ASSERT_EQ(rep.eliminates(m), !qr[v]) << f.label() << " M=" << M << " m=" << m;
      }
    }
  }
}

TEST(Certify, SmallPoolOnTwosPlusTwentyTwo) {
  const CaseFamily f{2, 2, 2};
  const auto cert = repsq::certify_family(f, {7, 9, 11, 13, 16, 1000, 1'000'000}, 200);
  EXPECT_TRUE(cert.direct_squares.empty());
  EXPECT_LE(cert.direct_checked, 195u);
}

// A certificate entry may only claim m whose value is a non-residue modulo
// that entry's modulus; a surviving m must escape every entry.
TEST(Certify, EntriesAreSound) {
  const auto pool = repsq::default_modulus_pool();
  for (const auto& f : repsq::expected_survivors()) {
    const auto cert = repsq::certify_family(f, pool, 200);
    EXPECT_TRUE(cert.direct_squares.empty()) << f.label();
    std::vector<std::vector<bool>> tables;
    for (const auto& e : cert.entries) tables.push_back(qr_table(e.modulus));
    for (int m = f.m_min; m <= 1500; ++m) {
      bool killed = false;
      for (std::size_t i = 0; i < cert.entries.size() && !killed; ++i)
        killed = !tables[i][value_mod(f, m, cert.entries[i].modulus)];
      if (!cert.survives(m)) ASSERT_TRUE(killed) << f.label() << " m=" << m;
      if (cert.survives(m)) ASSERT_FALSE(killed) << f.label() << " m=" << m;
    }
  }
}

TEST(Certify, TwoFamiliesCloseByCongruencesAlone) {
  const auto pool = repsq::default_modulus_pool();
  EXPECT_EQ(repsq::certify_family(CaseFamily{2, 2, 2}, pool, 0).status(), repsq::Certificate::Status::Certified);
  EXPECT_EQ(repsq::certify_family(CaseFamily{7, 9, 5}, pool, 0).status(), repsq::Certificate::Status::Certified);
}

TEST(Certify, GenuineSolutionsAreNeverEliminated) {
  // 4_m + 77 is a square at m = 2 and m = 5 (121 and 44521).
  const CaseFamily f{4, 7, 2, 2};
  const auto cert = repsq::certify_family(f, repsq::default_modulus_pool(), 50);
  EXPECT_TRUE(cert.survives(2));
  EXPECT_TRUE(cert.survives(5));
  EXPECT_EQ(cert.direct_squares, (std::vector<int>{2, 5}));
}
