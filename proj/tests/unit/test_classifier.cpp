#include "oracle.hpp"
#include "repsq/classifier.hpp"
#include "repsq/multibase.hpp"

#include <gtest/gtest.h>

#include <set>
#include <tuple>

namespace {

using Key = std::tuple<int, int, int, int>;  // (a, m, b, n), (m, a) >= (n, b)

Key key_of(const repsq::Solution& s) {
  return {s.first.digit, s.first.length, s.second.digit, s.second.length};
}

std::set<Key> keys(const std::vector<repsq::Solution>& sols) {
  std::set<Key> out;
  for (const auto& s : sols) out.insert(key_of(s));
  return out;
}

// Every unordered pair of repdigits with lengths in [2, max_len], checked by
// string construction and library sqrt.
std::set<Key> brute_force(int max_len, int base) {
  std::set<Key> out;
  for (int m = 2; m <= max_len; ++m)
    for (int a = 1; a < base; ++a)
      for (int n = 2; n <= max_len; ++n)
        for (int b = 1; b < base; ++b) {
          if (std::tie(m, a) < std::tie(n, b)) continue;
          if (oracle::is_square(oracle::repdigit(a, m, base) + oracle::repdigit(b, n, base))) out.insert({a, m, b, n});
        }
  return out;
}

}  // namespace

TEST(Classify, FiveDigitEnumeration) {
  const auto res = repsq::enumerate_solutions(5, 10);
  EXPECT_EQ(res.pairs_examined, 1035u);
  EXPECT_EQ(res.repdigits_examined, 45u);
  const std::vector<Key> expected{{9, 2, 2, 2}, {8, 2, 3, 2}, {7, 2, 4, 2}, {6, 2, 5, 2},
                                  {1, 3, 3, 2}, {1, 4, 3, 3}, {4, 5, 7, 2}};
  ASSERT_EQ(res.solutions.size(), expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i) EXPECT_EQ(key_of(res.solutions[i]), expected[i]) << i;
  std::set<repsq::Natural> squares;
  for (const auto& s : res.solutions) {
    EXPECT_TRUE(repsq::verify_solution(s));
    squares.insert(s.sum());
  }
  EXPECT_EQ(squares, (std::set<repsq::Natural>{121, 144, 1444, 44521}));
  EXPECT_TRUE(repsq::matches_known_solutions(res.solutions));
}

TEST(Classify, MatchesBruteForce) {
  for (int base : {3, 5, 7, 10, 12})
    for (int len = 2; len <= 6; ++len)
      EXPECT_EQ(keys(repsq::enumerate_pairs(2, len, base).solutions), brute_force(len, base)) << base << " " << len;
}

TEST(Classify, MonotoneInLength) {
  std::set<Key> previous;
  for (int d = 2; d <= 9; ++d) {
    const auto current = keys(repsq::enumerate_solutions(d, 10).solutions);
    for (const auto& k : previous) EXPECT_TRUE(current.count(k)) << d;
    previous = current;
  }
}

TEST(Classify, CanonicalOrderAndSymmetry) {
  for (int base : {4, 7, 10}) {
    const auto res = repsq::enumerate_pairs(1, 6, base, 2);
    for (const auto& s : res.solutions) {
      EXPECT_GE(std::tie(s.first.length, s.first.digit), std::tie(s.second.length, s.second.digit));
      const auto swapped = repsq::make_solution(s.second, s.first, s.root);
      EXPECT_EQ(key_of(swapped), key_of(s));
    }
    for (const auto& s : res.single_digit_hits) {
      EXPECT_EQ(s.second.length, 1);
      EXPECT_TRUE(repsq::verify_solution(s, true));
      EXPECT_FALSE(repsq::verify_solution(s, false));
    }
  }
}

TEST(Classify, WorkerCountDoesNotChangeResult) {
  const auto one = repsq::enumerate_solutions(8, 10, 1);
  const auto four = repsq::enumerate_solutions(8, 10, 4);
  ASSERT_EQ(one.solutions.size(), four.solutions.size());
  for (std::size_t i = 0; i < one.solutions.size(); ++i) EXPECT_EQ(key_of(one.solutions[i]), key_of(four.solutions[i]));
}

TEST(Classify, ExploreAgreesInBaseTen) {
  for (int d = 2; d <= 5; ++d)
    EXPECT_EQ(keys(repsq::explore(10, d)), keys(repsq::enumerate_solutions(d, 10).solutions)) << d;
}

TEST(Classify, VerifyRejectsTamperedSolutions) {
  auto s = repsq::enumerate_solutions(5, 10).solutions.front();
  EXPECT_TRUE(repsq::verify_solution(s));
  auto wrong_root = s;
  wrong_root.root += 1;
  EXPECT_FALSE(repsq::verify_solution(wrong_root));
  auto wrong_value = s;
  wrong_value.first.value += 1;
  EXPECT_FALSE(repsq::verify_solution(wrong_value));
}

TEST(Classify, DirectScanOnSurvivors) {
  EXPECT_TRUE(repsq::direct_scan(repsq::CaseFamily{8, 3, 2}, 6, 120).empty());
  EXPECT_EQ(repsq::direct_scan(repsq::CaseFamily{4, 7, 2, 2}, 2, 30), (std::vector<int>{2, 5}));
}
