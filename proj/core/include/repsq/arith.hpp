#pragma once
// Exact integer primitives: integer square/cube roots and perfect-square
// detection over arbitrary-precision and 128-bit operands.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <string>

namespace repsq {

/// Arbitrary-precision integer. `Natural` is used where the value is known to
/// be non-negative; `Integer` where it may be negative (Mordell x-coordinates).
using Natural = boost::multiprecision::cpp_int;
using Integer = boost::multiprecision::cpp_int;

using u128 = unsigned __int128;
using i128 = __int128;

/// floor(sqrt(n)) by integer Newton iteration. Throws std::domain_error for n < 0.
Natural isqrt(const Natural& n);

/// The root k when n == k*k, otherwise empty. Negative n is never a square.
std::optional<Natural> is_perfect_square(const Natural& n);

/// floor(cbrt(n)) for n >= 0.
Natural icbrt(const Natural& n);

std::uint64_t isqrt_u64(std::uint64_t n);
u128 isqrt_u128(u128 n);

/// Cheap necessary condition for squareness: n mod 64, 63, 65 and 11 must all
/// be quadratic residues. Rejects about 99.4% of non-squares.
bool passes_square_filter(std::uint64_t n_mod_2882880);
bool passes_square_filter_u128(u128 n);

std::optional<u128> square_root_u128(u128 n);

Natural pow_natural(std::uint64_t base, unsigned exp);

std::string to_string(const Integer& n);
Integer from_string(const std::string& s);

/// Narrowing conversions that fail loudly instead of truncating.
std::optional<u128> to_u128(const Natural& n);
Integer from_i128(i128 v);

}  // namespace repsq
