#include "oracle.hpp"
#include "repsq/repdigit.hpp"

#include <gtest/gtest.h>

using repsq::LengthPolicy;
using repsq::Natural;
using repsq::RepdigitError;

TEST(Repdigit, DecimalExamples) {
  EXPECT_EQ(repsq::repdigit_value(1, 3), 111);
  EXPECT_EQ(repsq::repdigit_value(4, 5), 44444);
  EXPECT_EQ(repsq::repdigit_value(9, 2), 99);
}

TEST(Repdigit, Base7Example) {
  const Natural v = repsq::repdigit_value(3, 7, 7);
  EXPECT_EQ(v, 411771);
  EXPECT_EQ(v, oracle::repdigit(3, 7, 7));
}

TEST(Repdigit, MatchesStringOracleAcrossBases) {
  for (int base = 2; base <= 40; ++base)
    for (int d = 1; d < base; ++d)
      for (int len = 2; len <= 30; ++len) ASSERT_EQ(repsq::repdigit_value(d, len, base), oracle::repdigit(d, len, base));
}

TEST(Repdigit, Recurrence) {
  for (int base : {3, 7, 10, 16, 1000})
    for (int d = 1; d < std::min(base, 12); ++d)
      for (int len = 2; len < 40; ++len)
        ASSERT_EQ(repsq::repdigit_value(d, len + 1, base), base * repsq::repdigit_value(d, len, base) + d);
}

TEST(Repdigit, DigitsReexpand) {
  for (int base : {2, 7, 10, 36})
    for (int d = 1; d < base; ++d)
      for (int len = 2; len <= 20; ++len) {
        const auto digits = repsq::to_digits(repsq::repdigit_value(d, len, base), base);
        ASSERT_EQ(digits, std::vector<int>(len, d));
      }
}

TEST(Repdigit, RejectsInvalidInput) {
  auto kind_of = [](auto fn) {
    try {
      fn();
    } catch (const RepdigitError& e) {
      return e.kind();
    }
    ADD_FAILURE() << "no exception";
    return RepdigitError::Kind::InvalidBase;
  };
  EXPECT_EQ(kind_of([] { repsq::repdigit_value(0, 3); }), RepdigitError::Kind::InvalidDigit);
  EXPECT_EQ(kind_of([] { repsq::repdigit_value(10, 3); }), RepdigitError::Kind::InvalidDigit);
  EXPECT_EQ(kind_of([] { repsq::repdigit_value(7, 2, 7); }), RepdigitError::Kind::InvalidDigit);
  EXPECT_EQ(kind_of([] { repsq::repdigit_value(1, 1); }), RepdigitError::Kind::InvalidLength);
  EXPECT_EQ(kind_of([] { repsq::repdigit_value(1, 0, 10, LengthPolicy::AllowSingleDigit); }),
            RepdigitError::Kind::InvalidLength);
  EXPECT_EQ(kind_of([] { repsq::repdigit_value(1, 3, 1); }), RepdigitError::Kind::InvalidBase);
  EXPECT_EQ(repsq::repdigit_value(7, 1, 10, LengthPolicy::AllowSingleDigit), 7);
}

TEST(Repdigit, PositionalValue) {
  const std::vector<int> digits{1, 2, 3};
  EXPECT_EQ(repsq::positional_value(digits, 10), 123);
  EXPECT_EQ(repsq::positional_value(digits, 7), 49 + 14 + 3);
}

TEST(Repdigit, Label) {
  EXPECT_EQ(repsq::Repdigit::make(4, 4).label(), "4_4");
}
