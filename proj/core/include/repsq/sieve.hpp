#pragma once
// Periodic congruence sieve over the family a_m + b_n (b, n fixed, m varying)
// and certificates composed from several moduli.

#include "repsq/arith.hpp"
#include "repsq/residue.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace repsq {

/// The one-parameter problem a_m + b_n = k^2 with b_n fixed, m >= m_min.
struct CaseFamily {
  int a = 1;
  int b = 1;
  int n = 2;
  int m_min = 6;

  /// Throws std::invalid_argument when digits are outside 1..9, n < 2 or m_min < n.
  void validate() const;
  Natural fixed_value() const;  // b_n
  Natural value(int m) const;   // a_m + b_n
  /// "8_m+33"
  std::string label() const;

  friend bool operator==(const CaseFamily& x, const CaseFamily& y) {
    return x.a == y.a && x.b == y.b && x.n == y.n;
  }
  friend auto operator<=>(const CaseFamily& x, const CaseFamily& y) {
    if (auto c = (x.a + x.b) <=> (y.a + y.b); c != 0) return c;
    if (auto c = x.n <=> y.n; c != 0) return c;
    return x.a <=> y.a;
  }
};

/// Parses "8+33" (digit a, then the fixed repdigit b_n written out).
CaseFamily parse_family(const std::string& text, int m_min = 6);

struct ClassStatus {
  std::uint64_t c = 0;         // m ≡ c (mod period)
  std::uint64_t residue = 0;   // (a_m + b_n) mod M on the whole class
  bool eliminated = false;
};

/// m below the periodic start, evaluated one at a time.
struct HeadStatus {
  int m = 0;
  std::uint64_t residue = 0;
  bool eliminated = false;
};

struct SieveReport {
  CaseFamily family;
  std::uint64_t modulus = 0;
  std::uint64_t preperiod = 0;
  std::uint64_t period = 1;
  std::vector<HeadStatus> head;       // m in [m_min, start)
  std::vector<ClassStatus> classes;   // size == period, for m >= start

  /// First m covered by `classes`: max(preperiod, m_min).
  std::uint64_t start() const;
  bool eliminates(std::uint64_t m) const;
  std::uint64_t residue_at(std::uint64_t m) const;
  bool eliminates_all() const;
  std::size_t eliminated_class_count() const;
};

SieveReport sieve_family(const CaseFamily& family, std::uint64_t modulus,
                         std::uint64_t ceiling = kDefaultModulusCeiling);

/// All prime powers <= 10^4 plus 10^3, 10^4, 10^5, 10^6, ascending.
std::vector<std::uint64_t> default_modulus_pool();

struct CertificateEntry {
  std::uint64_t modulus = 0;
  std::uint64_t preperiod = 0;
  std::uint64_t period = 1;
  std::vector<std::uint64_t> eliminated_classes;  // residues c mod period
  std::vector<int> eliminated_head;               // individual m below the periodic start
};

struct Certificate {
  enum class Status { Certified, Uncertified };

  CaseFamily family;
  std::vector<CertificateEntry> entries;
  /// Surviving m are either the listed head values in [m_min, periodic_start)
  /// or m >= periodic_start with m mod combined_period in surviving_classes.
  std::uint64_t periodic_start = 0;
  std::uint64_t combined_period = 1;
  std::vector<int> surviving_head;
  std::vector<std::uint64_t> surviving_classes;

  std::uint64_t direct_check_bound = 0;
  std::uint64_t direct_checked = 0;       // number of surviving m tested directly
  std::vector<int> direct_squares;        // surviving m where a_m + b_n is a square

  Status status() const {
    return surviving_head.empty() && surviving_classes.empty() ? Status::Certified
                                                               : Status::Uncertified;
  }
  bool survives(std::uint64_t m) const;
};

struct CertifyOptions {
  std::uint64_t period_cap = 100'000;  // largest combined period the greedy merge accepts
  std::uint64_t ceiling = kDefaultModulusCeiling;
  unsigned workers = 1;
};

/// Greedily merges per-modulus sieve reports (in pool order) into a covering of
/// m >= m_min; any m left uncovered up to `direct_bound` is checked by direct
/// evaluation of a_m + b_n.
Certificate certify_family(const CaseFamily& family, const std::vector<std::uint64_t>& pool,
                           std::uint64_t direct_bound, const CertifyOptions& options = {});

}  // namespace repsq
