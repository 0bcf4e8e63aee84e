#include "repsq/repdigit.hpp"

#include <algorithm>

namespace repsq {

Natural repdigit_value(int digit, int length, int base, LengthPolicy policy) {
  if (base < 2) {
    throw RepdigitError(RepdigitError::Kind::InvalidBase,
                        "base must be at least 2, got " + std::to_string(base));
  }
  if (digit < 1 || digit >= base) {
    throw RepdigitError(RepdigitError::Kind::InvalidDigit,
                        "digit " + std::to_string(digit) + " is not a nonzero base-" +
                            std::to_string(base) + " digit");
  }
  const int min_length = policy == LengthPolicy::AllowSingleDigit ? 1 : 2;
  if (length < min_length) {
    throw RepdigitError(RepdigitError::Kind::InvalidLength,
                        "repdigit length " + std::to_string(length) +
                            " is below the minimum " + std::to_string(min_length));
  }
  const Natural repunit = (pow_natural(static_cast<std::uint64_t>(base),
                                       static_cast<unsigned>(length)) - 1) /
                          (base - 1);
  return digit * repunit;
}

Natural positional_value(std::span<const int> digits, int base) {
  Natural v = 0;
  for (int d : digits) v = v * base + d;
  return v;
}

std::vector<int> to_digits(Natural n, int base) {
  if (base < 2) throw std::invalid_argument("base must be at least 2");
  if (n < 0) throw std::domain_error("to_digits of a negative integer");
  std::vector<int> out;
  do {
    out.push_back(static_cast<int>(n % base));
    n /= base;
  } while (n != 0);
  std::reverse(out.begin(), out.end());
  return out;
}

Repdigit Repdigit::make(int digit, int length, int base, LengthPolicy policy) {
  return Repdigit{digit, length, base, repdigit_value(digit, length, base, policy)};
}

std::string Repdigit::label() const {
  std::string s = std::to_string(digit) + "_" + std::to_string(length);
  if (base != 10) s += " (base " + std::to_string(base) + ")";
  return s;
}

}  // namespace repsq
