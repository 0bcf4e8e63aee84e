#include "repsq/reduce.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace repsq {
namespace {

std::uint64_t pow10_u64(int k) {
  std::uint64_t v = 1;
  for (int i = 0; i < k; ++i) v *= 10;
  return v;
}

// Largest d > 1 with d^2 dividing both digits, or 1.
int common_square_factor(int a, int b) {
  for (int d = 3; d >= 2; --d)
    if (a % (d * d) == 0 && b % (d * d) == 0) return d;
  return 1;
}

}  // namespace

std::string to_string(FamilyFate::Stage stage) {
  switch (stage) {
    case FamilyFate::Stage::Survives: return "survives";
    case FamilyFate::Stage::LengthBound: return "length-bound";
    case FamilyFate::Stage::FunnelResidue: return "funnel-residue";
    case FamilyFate::Stage::Repair: return "repair-modulus";
    case FamilyFate::Stage::SquareFactor: return "square-factor";
  }
  return "unknown";
}

std::vector<CaseFamily> expected_survivors(int m_min) {
  return {{2, 2, 2, m_min}, {3, 1, 3, m_min}, {2, 9, 2, m_min}, {4, 7, 2, m_min},
          {6, 5, 2, m_min}, {8, 3, 2, m_min}, {7, 9, 5, m_min}};
}

ReductionReport reduce_all(const ReduceConfig& config) {
  if (config.m_min < 2) throw std::invalid_argument("m_min must be at least 2");
  ReductionReport rep;
  rep.config = config;
  rep.table = table_a(6, config.ceiling);

  // Both lengths at least k and -(a+b) a non-residue mod 10^k for every a+b
  // means the shorter side has fewer than k digits.
  rep.global_length_bound = rep.table.first_all_x_exponent();
  if (rep.global_length_bound == 0)
    throw std::logic_error("no all-X column in Table A; the length bound does not close");

  for (int s : rep.table.sums) {
    if (!rep.table.at(s, 2)) continue;
    rep.admissible_sums.push_back(s);
    const int first_x = rep.table.first_x_exponent(s);
    const int bound = first_x == 0 ? rep.global_length_bound
                                   : std::min(first_x, rep.global_length_bound);
    rep.max_n_by_sum[s] = bound - 1;
  }

  const auto family_for = [&](int a, int b, int n) {
    return CaseFamily{a, b, n, std::max(config.m_min, n)};
  };

  // Candidates: every digit pair with an admissible sum and n up to the
  // global bound; the per-sum bound then prunes by the 10^k columns.
  std::vector<CaseFamily> candidates;
  for (int s : rep.admissible_sums)
    for (int a = 1; a <= 9; ++a) {
      const int b = s - a;
      if (b < 1 || b > 9) continue;
      for (int n = 2; n < rep.global_length_bound; ++n) candidates.push_back(family_for(a, b, n));
    }

  std::set<CaseFamily> pending;
  for (const auto& f : candidates) {
    const int d = common_square_factor(f.a, f.b);
    if (d > 1) {
      const CaseFamily reduced = family_for(f.a / (d * d), f.b / (d * d), f.n);
      FamilyFate fate{f, FamilyFate::Stage::SquareFactor,
                      f.label() + " = " + std::to_string(d * d) + " * (" + reduced.label() +
                          "), same squareness",
                      std::nullopt, reduced};
      rep.fates.push_back(fate);
      pending.insert(reduced);
      continue;
    }
    pending.insert(f);
  }

  std::vector<CaseFamily> after_funnel;
  for (const auto& f : pending) {
    const int s = f.a + f.b;
    const auto bound = rep.max_n_by_sum.find(s);
    if (bound == rep.max_n_by_sum.end() || f.n > bound->second) {
      const int k = bound == rep.max_n_by_sum.end() ? 2 : bound->second + 1;
      rep.fates.push_back({f, FamilyFate::Stage::LengthBound,
                           "-" + std::to_string(s) + " is not a square mod 10^" +
                               std::to_string(k) + " and both lengths are >= " +
                               std::to_string(k),
                           pow10_u64(k), std::nullopt});
      continue;
    }
    const SieveReport sieve = sieve_family(f, config.funnel_modulus, config.ceiling);
    const std::uint64_t M = config.funnel_modulus;
    for (const auto& c : sieve.classes) {
      const auto scaled = static_cast<std::uint64_t>((u128{9} * c.residue) % M);
      rep.funnel_verdicts.push_back({f, M, c.residue, scaled, !c.eliminated});
    }
    if (sieve.eliminates_all()) {
      rep.fates.push_back({f, FamilyFate::Stage::FunnelResidue,
                           "no m-class is a square mod " + std::to_string(M), M, std::nullopt});
      continue;
    }
    after_funnel.push_back(f);
  }

  for (const auto& f : after_funnel) {
    std::optional<std::uint64_t> killer;
    for (std::uint64_t M : config.repair_pool) {
      const SieveReport sieve = sieve_family(f, M, config.ceiling);
      const bool all = sieve.eliminates_all();
      rep.repair_verdicts.push_back({f, M, sieve.period, sieve.eliminated_class_count(), all});
      if (all && !killer) killer = M;
    }
    if (killer) {
      rep.fates.push_back({f, FamilyFate::Stage::Repair,
                           "every m-class is a non-residue mod " + std::to_string(*killer),
                           killer, std::nullopt});
      continue;
    }
    rep.fates.push_back({f, FamilyFate::Stage::Survives, "needs elliptic-curve treatment",
                         std::nullopt, std::nullopt});
    rep.survivors.push_back(f);
  }
  std::sort(rep.survivors.begin(), rep.survivors.end());
  std::stable_sort(rep.fates.begin(), rep.fates.end(),
                   [](const auto& x, const auto& y) { return x.family < y.family; });
  return rep;
}

}  // namespace repsq
