#pragma once
// Base-c identity families for sums of two repdigits and a brute-force
// explorer for arbitrary bases.

#include "repsq/classifier.hpp"

#include <string>
#include <vector>

namespace repsq {

enum class IdentityId {
  TwoDigitFamily,  // (c-k)_2 + (k+1)_2 = (c+1)^2
  OnesAndThrees,   // 1_3 + 3_2 = (c+2)^2
  FoursAndTail,    // 4_5 + (c-3)_2 = (2c^2+c+1)^2
  SixOnesFourThrees,  // 1_6 + 3_4 = (m(c^2+2))^2 when c = m^2 - 1
};

std::string to_string(IdentityId id);

struct Operand {
  int digit = 0;
  int length = 0;
};

struct IdentityCheck {
  IdentityId id = IdentityId::TwoDigitFamily;
  int base = 10;
  int parameter = 0;            // k for the two-digit family, m for the c = m^2-1 family
  std::vector<Operand> operands;
  Natural lhs;                  // sum of the operands, evaluated positionally
  Natural root;                 // the identity's closed-form root
  Natural rhs;                  // root^2
  bool digits_legal = false;    // every digit in [1, c-1]
  bool pass = false;            // lhs == rhs
};

/// Evaluates every identity whose shape applies in base c over its
/// digit-legal parameter range. The c = m^2-1 identity is evaluated whenever c
/// has that form, and reports `digits_legal = false` when 3 is not a base-c digit.
std::vector<IdentityCheck> check_family_identities(int base);

struct ExploreOptions {
  int max_length_ceiling = 64;
  unsigned workers = 1;
};

/// Every unordered pair of base-c repdigits with lengths in [2, max_len] whose
/// sum is a square. Throws BoundError when max_len exceeds the ceiling.
std::vector<Solution> explore(int base, int max_len, const ExploreOptions& options = {});

/// The digit string "(11111111111)_7" displayed for the base-7 example,
/// alongside what it actually evaluates to.
struct DisplayedExample {
  std::string text;
  Operand first;
  Operand second;
  int base = 7;
  Natural claimed_square;
  Natural claimed_root;
  Natural displayed_value;  // value of the displayed digit strings
};

DisplayedExample base7_displayed_example();

}  // namespace repsq
