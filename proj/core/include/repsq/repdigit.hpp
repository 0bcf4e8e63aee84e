#pragma once

#include "repsq/arith.hpp"

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace repsq {

/// Single-digit numbers are not repdigits unless the caller opts in.
enum class LengthPolicy { RequireRepeated, AllowSingleDigit };

class RepdigitError : public std::invalid_argument {
 public:
  enum class Kind { InvalidDigit, InvalidLength, InvalidBase };
  RepdigitError(Kind kind, const std::string& what)
      : std::invalid_argument(what), kind_(kind) {}
  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

/// a*(c^m - 1)/(c - 1): the digit a written m times in base c.
Natural repdigit_value(int digit, int length, int base = 10,
                       LengthPolicy policy = LengthPolicy::RequireRepeated);

/// Evaluates a most-significant-first digit string in `base`. Digits are not
/// range-checked, so (3333)_3 evaluates to 120.
Natural positional_value(std::span<const int> digits, int base);

/// Base-`base` digits of n, most significant first. n == 0 gives {0}.
std::vector<int> to_digits(Natural n, int base);

struct Repdigit {
  int digit = 1;
  int length = 2;
  int base = 10;
  Natural value;

  static Repdigit make(int digit, int length, int base = 10,
                       LengthPolicy policy = LengthPolicy::RequireRepeated);

  std::vector<int> digits() const { return std::vector<int>(length, digit); }
  /// "4_5" style label, with a base suffix outside base 10.
  std::string label() const;

  friend bool operator==(const Repdigit& x, const Repdigit& y) {
    return x.digit == y.digit && x.length == y.length && x.base == y.base;
  }
};

}  // namespace repsq
