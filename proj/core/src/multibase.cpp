#include "repsq/multibase.hpp"

#include <stdexcept>

namespace repsq {
namespace {

IdentityCheck evaluate(IdentityId id, int base, int parameter, std::vector<Operand> operands,
                       const Natural& root) {
  IdentityCheck check;
  check.id = id;
  check.base = base;
  check.parameter = parameter;
  check.root = root;
  check.rhs = root * root;
  check.digits_legal = true;
  check.lhs = 0;
  for (const auto& op : operands) {
    const bool legal = op.digit >= 1 && op.digit < base && op.length >= 2;
    check.digits_legal = check.digits_legal && legal;
    const std::vector<int> digits(static_cast<std::size_t>(op.length), op.digit);
    const Natural value = positional_value(digits, base);
    if (legal && value != repdigit_value(op.digit, op.length, base))
      throw std::logic_error("positional and closed-form repdigit values disagree");
    check.lhs += value;
  }
  check.operands = std::move(operands);
  check.pass = check.lhs == check.rhs;
  return check;
}

}  // namespace

std::string to_string(IdentityId id) {
  switch (id) {
    case IdentityId::TwoDigitFamily: return "two-digit-family";
    case IdentityId::OnesAndThrees: return "ones-and-threes";
    case IdentityId::FoursAndTail: return "fours-and-tail";
    case IdentityId::SixOnesFourThrees: return "six-ones-four-threes";
  }
  return "unknown";
}

std::vector<IdentityCheck> check_family_identities(int base) {
  if (base < 2) throw std::invalid_argument("base must be at least 2");
  std::vector<IdentityCheck> out;
  const Natural c = base;

  // k + 1 <= c - 1 keeps both digits legal.
  for (int k = 1; k <= base - 2; ++k)
    out.push_back(evaluate(IdentityId::TwoDigitFamily, base, k,
                           {{base - k, 2}, {k + 1, 2}}, c + 1));
  if (base >= 4)
    out.push_back(evaluate(IdentityId::OnesAndThrees, base, 0, {{1, 3}, {3, 2}}, c + 2));
  if (base >= 5)
    out.push_back(evaluate(IdentityId::FoursAndTail, base, 0, {{4, 5}, {base - 3, 2}},
                           2 * c * c + c + 1));
  for (int m = 2; m * m - 1 <= base; ++m) {
    if (m * m - 1 != base) continue;
    out.push_back(evaluate(IdentityId::SixOnesFourThrees, base, m, {{1, 6}, {3, 4}},
                           m * (c * c + 2)));
  }
  return out;
}

std::vector<Solution> explore(int base, int max_len, const ExploreOptions& options) {
  if (base < 2) throw std::invalid_argument("base must be at least 2");
  if (max_len < 2) throw std::invalid_argument("max_len must be at least 2");
  if (max_len > options.max_length_ceiling)
    throw BoundError("max_len " + std::to_string(max_len) + " exceeds ceiling " +
                     std::to_string(options.max_length_ceiling));
  return enumerate_pairs(2, max_len, base, options.workers).solutions;
}

DisplayedExample base7_displayed_example() {
  DisplayedExample ex;
  ex.text = "(11111111111)_7 + (3333333)_7";
  ex.first = {1, 11};
  ex.second = {3, 7};
  ex.base = 7;
  ex.claimed_root = 48060;
  ex.claimed_square = Natural(2309763600ull);
  ex.displayed_value = repdigit_value(1, 11, 7) + repdigit_value(3, 7, 7);
  return ex;
}

}  // namespace repsq
