#include "repsq/arith.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace repsq {
namespace {

constexpr std::uint64_t kFilterModulus = 64ull * 63 * 65 * 11;  // 2882880

template <std::size_t M>
constexpr std::array<bool, M> residue_table() {
  std::array<bool, M> t{};
  for (std::size_t z = 0; z < M; ++z) t[(z * z) % M] = true;
  return t;
}

constexpr auto kSq64 = residue_table<64>();
constexpr auto kSq63 = residue_table<63>();
constexpr auto kSq65 = residue_table<65>();
constexpr auto kSq11 = residue_table<11>();

unsigned bit_length_u128(u128 n) {
  const auto hi = static_cast<std::uint64_t>(n >> 64);
  if (hi != 0) return 128 - static_cast<unsigned>(__builtin_clzll(hi));
  const auto lo = static_cast<std::uint64_t>(n);
  return lo == 0 ? 0 : 64 - static_cast<unsigned>(__builtin_clzll(lo));
}

}  // namespace

Natural isqrt(const Natural& n) {
  if (n < 0) throw std::domain_error("isqrt of a negative integer");
  if (n < 2) return n;
  // 2^ceil(bits/2) is strictly above sqrt(n); Newton descends monotonically
  // from above and stops exactly at the floor.
  const unsigned bits = static_cast<unsigned>(boost::multiprecision::msb(n)) + 1;
  Natural x = Natural(1) << ((bits + 1) / 2);
  for (;;) {
    Natural y = (x + n / x) >> 1;
    if (y >= x) return x;
    x = std::move(y);
  }
}

std::optional<Natural> is_perfect_square(const Natural& n) {
  if (n < 0) return std::nullopt;
  const auto residue = static_cast<std::uint64_t>(n % kFilterModulus);
  if (!passes_square_filter(residue)) return std::nullopt;
  Natural r = isqrt(n);
  if (r * r != n) return std::nullopt;
  return r;
}

Natural icbrt(const Natural& n) {
  if (n < 0) throw std::domain_error("icbrt of a negative integer");
  if (n < 8) return n == 0 ? Natural(0) : Natural(1);
  const unsigned bits = static_cast<unsigned>(boost::multiprecision::msb(n)) + 1;
  Natural x = Natural(1) << ((bits + 2) / 3);
  for (;;) {
    Natural y = (2 * x + n / (x * x)) / 3;
    if (y >= x) break;
    x = std::move(y);
  }
  while (x * x * x > n) --x;
  while ((x + 1) * (x + 1) * (x + 1) <= n) ++x;
  return x;
}

std::uint64_t isqrt_u64(std::uint64_t n) {
  return static_cast<std::uint64_t>(isqrt_u128(n));
}

u128 isqrt_u128(u128 n) {
  if (n < 2) return n;
  const unsigned bits = bit_length_u128(n);
  u128 x = u128{1} << ((bits + 1) / 2);
  for (;;) {
    const u128 y = (x + n / x) >> 1;
    if (y >= x) return x;
    x = y;
  }
}

bool passes_square_filter(std::uint64_t r) {
  return kSq64[r % 64] && kSq63[r % 63] && kSq65[r % 65] && kSq11[r % 11];
}

bool passes_square_filter_u128(u128 n) {
  return passes_square_filter(static_cast<std::uint64_t>(n % kFilterModulus));
}

std::optional<u128> square_root_u128(u128 n) {
  if (!passes_square_filter_u128(n)) return std::nullopt;
  const u128 r = isqrt_u128(n);
  if (r * r != n) return std::nullopt;
  return r;
}

Natural pow_natural(std::uint64_t base, unsigned exp) {
  return boost::multiprecision::pow(Natural(base), exp);
}

std::string to_string(const Integer& n) { return n.str(); }

Integer from_string(const std::string& s) {
  const std::size_t start = !s.empty() && s[0] == '-' ? 1 : 0;
  if (start == s.size() ||
      !std::all_of(s.begin() + static_cast<std::ptrdiff_t>(start), s.end(),
                   [](char c) { return c >= '0' && c <= '9'; }))
    throw std::invalid_argument("not a decimal integer: '" + s + "'");
  return Integer(s);
}

std::optional<u128> to_u128(const Natural& n) {
  if (n == 0) return u128{0};
  if (n < 0 || boost::multiprecision::msb(n) >= 128) return std::nullopt;
  const auto lo = static_cast<std::uint64_t>(n & Natural(~std::uint64_t{0}));
  const auto hi = static_cast<std::uint64_t>(n >> 64);
  return (u128{hi} << 64) | lo;
}

Integer from_i128(i128 v) {
  const bool negative = v < 0;
  u128 mag = negative ? u128(0) - static_cast<u128>(v) : static_cast<u128>(v);
  Integer out = Integer(static_cast<std::uint64_t>(mag >> 64));
  out <<= 64;
  out += static_cast<std::uint64_t>(mag);
  return negative ? Integer(-out) : out;
}

}  // namespace repsq
