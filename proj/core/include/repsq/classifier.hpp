#pragma once
// Exhaustive pair enumeration and the assembled evidence chain.

#include "repsq/reduce.hpp"
#include "repsq/repdigit.hpp"
#include "repsq/sieve.hpp"
#include "repsq/table_b.hpp"

#include <cstdint>
#include <vector>

namespace repsq {

/// Two repdigits whose sum is root^2. Canonical order: first.length >=
/// second.length, ties broken by first.digit >= second.digit.
struct Solution {
  Repdigit first;
  Repdigit second;
  Natural root;

  Natural sum() const { return first.value + second.value; }
  friend bool operator==(const Solution& x, const Solution& y) {
    return x.first == y.first && x.second == y.second && x.root == y.root;
  }
};

Solution make_solution(Repdigit x, Repdigit y, Natural root);

/// Recomputes both operands from their digit strings, the sum and the root.
/// `allow_single_digit` admits length-1 operands.
bool verify_solution(const Solution& s, bool allow_single_digit = false);

/// Ascending by root, then canonical operand order (longer, larger first).
void sort_solutions(std::vector<Solution>& solutions);

struct EnumerationResult {
  int min_length = 1;
  int max_length = 5;
  int base = 10;
  std::uint64_t repdigits_examined = 0;
  std::uint64_t pairs_examined = 0;
  std::vector<Solution> solutions;          // both operands have length >= 2
  std::vector<Solution> single_digit_hits;  // square sums using a 1-digit operand
};

/// Tests every unordered pair (with repetition) of repdigits with lengths in
/// [min_length, max_length] in `base`. Hits with a length-1 operand are kept
/// apart from solutions.
EnumerationResult enumerate_pairs(int min_length, int max_length, int base, unsigned workers = 1);

/// Full-scale enumeration: lengths 1..max_digits are examined, which for
/// (5, 10) is 45 numbers and 45*46/2 = 1035 pairs; only length >= 2 pairs
/// count as solutions.
EnumerationResult enumerate_solutions(int max_digits, int base = 10, unsigned workers = 1);

/// Compares a solution list against the shipped list of known solutions.
bool matches_known_solutions(const std::vector<Solution>& solutions);

/// Squares of the form a_m + b_n for m in [lo, hi].
std::vector<int> direct_scan(const CaseFamily& family, int lo, int hi);

struct ReportConfig {
  int m_min = 6;
  std::vector<std::uint64_t> pool = default_modulus_pool();
  std::vector<std::uint64_t> repair_pool{7, 9};
  std::uint64_t direct_bound = 200;
  std::uint64_t x_scan_bound = 2'000'000;
  int p_max = 30;
  int max_digits = 5;
  int base = 10;
  unsigned workers = 1;
  std::uint64_t period_cap = 100'000;
  std::uint64_t ceiling = kDefaultModulusCeiling;
  ScanOptions scan;  // progress hook for the Mordell scans
};

/// m-classes of a surviving family, restricted to m ≡ r (mod 3), that no
/// congruence certificate or direct check covers. Their elimination rests on
/// the completeness of the integer-point list of the curve with this N.
struct ResidualObligation {
  CaseFamily family;
  int r = 0;
  Natural N;
  std::uint64_t modulus = 1;                // classes are m mod this
  std::uint64_t start = 0;                  // classes apply for m >= start
  std::vector<std::uint64_t> classes;
  std::vector<int> head;                    // individual m below start
  std::uint64_t direct_checked_through = 0; // all m <= this were checked directly
};

struct DirectScanResult {
  CaseFamily family;
  int lo = 0;
  int hi = 0;
  std::vector<int> squares;
};

struct FullReport {
  ReportConfig config;
  TableA table;
  bool table_a_matches = false;
  ReductionReport reduction;
  bool survivors_match = false;
  std::vector<Certificate> certificates;
  std::vector<DirectScanResult> direct_scans;
  TableBReport mordell;
  EnumerationResult enumeration;
  bool known_solutions_match = false;
  std::vector<ResidualObligation> obligations;

  bool consistent() const;
};

/// Table A comparison against the shipped copy.
bool table_a_matches_golden(const TableA& table);

FullReport full_report(const ReportConfig& config = {});

}  // namespace repsq
