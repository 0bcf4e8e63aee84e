#pragma once
// Slow, obviously-correct reference computations used to cross-check the
// library. Nothing here calls into repsq arithmetic.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace oracle {

using big = boost::multiprecision::cpp_int;

// Value of `length` copies of `digit` read left to right in `base`.
inline big repdigit(int digit, int length, int base = 10) {
  const std::vector<int> digits(static_cast<std::size_t>(length), digit);
  big v = 0;
  for (int d : digits) v = v * base + d;
  return v;
}

inline std::optional<big> square_root(const big& n) {
  if (n < 0) return std::nullopt;
  big r = boost::multiprecision::sqrt(n);
  if (r * r == n) return r;
  return std::nullopt;
}

inline bool is_square(const big& n) { return square_root(n).has_value(); }

// Every z^2 mod M for z in [0, M).
inline std::set<std::uint64_t> squares_mod(std::uint64_t M) {
  std::set<std::uint64_t> out;
  for (std::uint64_t z = 0; z < M; ++z) out.insert(z * z % M);
  return out;
}

inline bool is_qr(std::int64_t t, std::uint64_t M) {
  const auto m = static_cast<std::int64_t>(M);
  const auto r = static_cast<std::uint64_t>(((t % m) + m) % m);
  for (std::uint64_t z = 0; z <= M / 2; ++z)
    if (z * z % M == r) return true;
  return false;
}

// Integer points of y^2 = x^3 + N with x in [lo, hi], by walking x.
inline std::vector<std::int64_t> curve_points(const big& N, std::int64_t lo, std::int64_t hi) {
  std::vector<std::int64_t> xs;
  for (std::int64_t x = lo; x <= hi; ++x) {
    big bx = x;
    if (is_square(bx * bx * bx + N)) xs.push_back(x);
  }
  return xs;
}

}  // namespace oracle
