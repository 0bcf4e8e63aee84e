#pragma once
// Quadratic residues modulo M, the Table A matrix, and the period structure of
// repdigit sequences reduced modulo M.

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace repsq {

inline constexpr std::uint64_t kDefaultModulusCeiling = 10'000'000;

/// A requested bound exceeds its configured ceiling. The CLI maps this to exit 3.
class BoundError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// The set {z^2 mod M : 0 <= z < M}, stored as a bitset. Copies share storage.
class SquaresMod {
 public:
  SquaresMod() = default;
  SquaresMod(std::uint64_t modulus, std::shared_ptr<const std::vector<std::uint64_t>> bits,
             std::uint64_t count)
      : modulus_(modulus), bits_(std::move(bits)), count_(count) {}

  std::uint64_t modulus() const noexcept { return modulus_; }
  std::uint64_t size() const noexcept { return count_; }

  /// Membership of t mod M.
  bool contains(std::uint64_t t) const noexcept {
    t %= modulus_;
    return ((*bits_)[t >> 6] >> (t & 63)) & 1u;
  }
  /// Membership of an arbitrary signed residue (e.g. -(a+b)).
  bool contains_signed(std::int64_t t) const noexcept {
    const auto m = static_cast<std::int64_t>(modulus_);
    return contains(static_cast<std::uint64_t>(((t % m) + m) % m));
  }

  std::vector<std::uint64_t> members() const;

 private:
  std::uint64_t modulus_ = 0;
  std::shared_ptr<const std::vector<std::uint64_t>> bits_;
  std::uint64_t count_ = 0;
};

/// Exact quadratic residues mod M by enumerating z in [0, M/2].
/// Throws BoundError when M exceeds `ceiling` and std::invalid_argument for M < 2.
SquaresMod squares_mod(std::uint64_t modulus, std::uint64_t ceiling = kDefaultModulusCeiling);

/// Same as squares_mod but memoized process-wide; safe for concurrent callers.
SquaresMod squares_mod_cached(std::uint64_t modulus,
                              std::uint64_t ceiling = kDefaultModulusCeiling);

/// Rows -(a+b) for a+b in 2..18, columns 10^k. Entry true ("O") when
/// -(a+b) mod 10^k is a quadratic residue.
struct TableA {
  std::vector<int> sums;       // 2..18
  std::vector<int> exponents;  // k for the column modulus 10^k
  std::vector<std::vector<bool>> residue;  // [row][column]

  bool at(int sum, int exponent) const;
  /// Smallest column exponent whose entries are all X, or 0 if none.
  int first_all_x_exponent() const;
  /// Smallest exponent whose entry for `sum` is X, or 0 if none.
  int first_x_exponent(int sum) const;
  std::vector<std::string> render_rows() const;
};

TableA table_a(int max_exponent = 6, std::uint64_t ceiling = kDefaultModulusCeiling);

struct ResidueStructure {
  std::uint64_t preperiod = 0;
  std::uint64_t period = 1;
  friend bool operator==(const ResidueStructure&, const ResidueStructure&) = default;
};

/// Smallest (s, L) with x_{m+L} = x_m for all m >= s, where x_m = a_m mod M is
/// the base-`base` repdigit sequence starting at x_0 = 0 and advancing by
/// x_{m+1} = base*x_m + a. Brent's cycle detection, O(1) memory.
ResidueStructure power_residue_structure(int digit, std::uint64_t modulus, int base = 10);

/// a_m mod M for a given m, by the same recurrence (O(m)).
std::uint64_t repdigit_mod(int digit, std::uint64_t length, std::uint64_t modulus, int base = 10);

}  // namespace repsq
