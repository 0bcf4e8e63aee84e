#pragma once
// The congruence funnel that cuts all digit pairs down to the families that
// need elliptic-curve treatment.

#include "repsq/residue.hpp"
#include "repsq/sieve.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace repsq {

struct ReduceConfig {
  int m_min = 6;
  /// Modulus for the per-family residue step (the funnel's main sieve).
  std::uint64_t funnel_modulus = 1'000'000;
  /// Extra moduli tried one at a time on the funnel's survivors. A family is
  /// dropped only if a single modulus eliminates every m-class.
  std::vector<std::uint64_t> repair_pool{7, 9};
  std::uint64_t ceiling = kDefaultModulusCeiling;
};

/// A single residue verdict. `scaled_residue` is 9*(a_m + b_n) mod M, i.e.
/// b*10^n - (a+b) mod M for m past the preperiod; `residue` is a_m + b_n mod M.
/// The two always agree on quadratic-residue status because 9 is a unit square
/// whenever gcd(M, 3) = 1.
struct ResidueVerdict {
  CaseFamily family;
  std::uint64_t modulus = 0;
  std::uint64_t residue = 0;
  std::uint64_t scaled_residue = 0;
  bool quadratic_residue = false;
};

struct RepairVerdict {
  CaseFamily family;
  std::uint64_t modulus = 0;
  std::uint64_t period = 1;
  std::size_t eliminated_classes = 0;
  bool eliminates_all = false;
};

struct FamilyFate {
  enum class Stage { Survives, LengthBound, FunnelResidue, Repair, SquareFactor };
  CaseFamily family;
  Stage stage = Stage::Survives;
  std::string reason;
  std::optional<std::uint64_t> modulus;
  std::optional<CaseFamily> reduced_to;
};

struct ReductionReport {
  ReduceConfig config;
  TableA table;
  int global_length_bound = 0;      // n < this for every family
  std::vector<int> admissible_sums; // a+b passing the 10^2 column
  std::map<int, int> max_n_by_sum;
  std::vector<ResidueVerdict> funnel_verdicts;
  std::vector<RepairVerdict> repair_verdicts;
  std::vector<FamilyFate> fates;
  std::vector<CaseFamily> survivors;  // sorted by (a+b, n, a)
};

ReductionReport reduce_all(const ReduceConfig& config = {});

/// The seven families that need elliptic-curve treatment, in canonical order.
std::vector<CaseFamily> expected_survivors(int m_min = 6);

std::string to_string(FamilyFate::Stage stage);

}  // namespace repsq
