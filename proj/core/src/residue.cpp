#include "repsq/residue.hpp"

#include "repsq/arith.hpp"

#include <map>
#include <mutex>

namespace repsq {

std::vector<std::uint64_t> SquaresMod::members() const {
  std::vector<std::uint64_t> out;
  out.reserve(count_);
  for (std::uint64_t t = 0; t < modulus_; ++t)
    if (contains(t)) out.push_back(t);
  return out;
}

SquaresMod squares_mod(std::uint64_t modulus, std::uint64_t ceiling) {
  if (modulus < 2) throw std::invalid_argument("modulus must be at least 2");
  if (modulus > ceiling) {
    throw BoundError("modulus " + std::to_string(modulus) + " exceeds ceiling " +
                     std::to_string(ceiling));
  }
  auto bits = std::make_shared<std::vector<std::uint64_t>>((modulus + 63) / 64, 0);
  std::uint64_t count = 0;
  // z and M - z have the same square, so half the range suffices.
  for (std::uint64_t z = 0; z <= modulus / 2; ++z) {
    const auto t = static_cast<std::uint64_t>((u128{z} * z) % modulus);
    auto& word = (*bits)[t >> 6];
    const std::uint64_t mask = std::uint64_t{1} << (t & 63);
    if (!(word & mask)) {
      word |= mask;
      ++count;
    }
  }
  return SquaresMod(modulus, std::move(bits), count);
}

SquaresMod squares_mod_cached(std::uint64_t modulus, std::uint64_t ceiling) {
  static std::mutex mu;
  static std::map<std::uint64_t, SquaresMod> cache;
  if (modulus > ceiling) {
    throw BoundError("modulus " + std::to_string(modulus) + " exceeds ceiling " +
                     std::to_string(ceiling));
  }
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(modulus); it != cache.end()) return it->second;
  }
  SquaresMod computed = squares_mod(modulus, ceiling);
  std::lock_guard lock(mu);
  return cache.emplace(modulus, std::move(computed)).first->second;
}

bool TableA::at(int sum, int exponent) const {
  for (std::size_t i = 0; i < sums.size(); ++i) {
    if (sums[i] != sum) continue;
    for (std::size_t j = 0; j < exponents.size(); ++j)
      if (exponents[j] == exponent) return residue[i][j];
  }
  throw std::out_of_range("no Table A entry for sum " + std::to_string(sum) +
                          ", exponent " + std::to_string(exponent));
}

int TableA::first_all_x_exponent() const {
  for (std::size_t j = 0; j < exponents.size(); ++j) {
    bool all_x = true;
    for (const auto& row : residue) all_x = all_x && !row[j];
    if (all_x) return exponents[j];
  }
  return 0;
}

int TableA::first_x_exponent(int sum) const {
  for (std::size_t i = 0; i < sums.size(); ++i) {
    if (sums[i] != sum) continue;
    for (std::size_t j = 0; j < exponents.size(); ++j)
      if (!residue[i][j]) return exponents[j];
    return 0;
  }
  throw std::out_of_range("sum " + std::to_string(sum) + " not in Table A");
}

std::vector<std::string> TableA::render_rows() const {
  std::vector<std::string> out;
  for (const auto& row : residue) {
    std::string s;
    for (bool o : row) s += o ? 'O' : 'X';
    out.push_back(std::move(s));
  }
  return out;
}

TableA table_a(int max_exponent, std::uint64_t ceiling) {
  if (max_exponent < 2) throw std::invalid_argument("Table A needs at least the 10^2 column");
  TableA t;
  for (int s = 2; s <= 18; ++s) t.sums.push_back(s);
  for (int k = 2; k <= max_exponent; ++k) t.exponents.push_back(k);
  t.residue.assign(t.sums.size(), std::vector<bool>(t.exponents.size(), false));
  for (std::size_t j = 0; j < t.exponents.size(); ++j) {
    const auto exp = static_cast<unsigned>(t.exponents[j]);
    if (exp > 19) throw BoundError("10^" + std::to_string(exp) + " exceeds 64-bit range");
    std::uint64_t modulus = 1;
    for (unsigned e = 0; e < exp; ++e) modulus *= 10;
    const SquaresMod sq = squares_mod_cached(modulus, ceiling);
    for (std::size_t i = 0; i < t.sums.size(); ++i)
      t.residue[i][j] = sq.contains_signed(-t.sums[i]);
  }
  return t;
}

namespace {

struct RepdigitStep {
  std::uint64_t modulus;
  std::uint64_t base;
  std::uint64_t digit;
  std::uint64_t operator()(std::uint64_t x) const {
    return static_cast<std::uint64_t>((u128{x} * base + digit) % modulus);
  }
};

}  // namespace

ResidueStructure power_residue_structure(int digit, std::uint64_t modulus, int base) {
  if (modulus < 2) throw std::invalid_argument("modulus must be at least 2");
  if (base < 2) throw std::invalid_argument("base must be at least 2");
  const RepdigitStep step{modulus, static_cast<std::uint64_t>(base),
                          static_cast<std::uint64_t>(digit) % modulus};
  const std::uint64_t x0 = 0;

  // Brent: find the cycle length first, then the tail length.
  std::uint64_t power = 1, period = 1;
  std::uint64_t tortoise = x0, hare = step(x0);
  while (tortoise != hare) {
    if (power == period) {
      tortoise = hare;
      power *= 2;
      period = 0;
    }
    hare = step(hare);
    ++period;
  }
  tortoise = hare = x0;
  for (std::uint64_t i = 0; i < period; ++i) hare = step(hare);
  std::uint64_t preperiod = 0;
  while (tortoise != hare) {
    tortoise = step(tortoise);
    hare = step(hare);
    ++preperiod;
  }
  return {preperiod, period};
}

std::uint64_t repdigit_mod(int digit, std::uint64_t length, std::uint64_t modulus, int base) {
  const RepdigitStep step{modulus, static_cast<std::uint64_t>(base),
                          static_cast<std::uint64_t>(digit) % modulus};
  std::uint64_t x = 0;
  for (std::uint64_t m = 0; m < length; ++m) x = step(x);
  return x;
}

}  // namespace repsq
