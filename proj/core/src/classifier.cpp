#include "repsq/classifier.hpp"

#include "repsq/golden.hpp"
#include "repsq/parallel.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <tuple>

namespace repsq {

Solution make_solution(Repdigit x, Repdigit y, Natural root) {
  if (std::tie(x.length, x.digit) < std::tie(y.length, y.digit)) std::swap(x, y);
  return Solution{std::move(x), std::move(y), std::move(root)};
}

bool verify_solution(const Solution& s, bool allow_single_digit) {
  const auto check_operand = [&](const Repdigit& r) {
    if (r.base < 2 || r.digit < 1 || r.digit >= r.base) return false;
    if (r.length < (allow_single_digit ? 1 : 2)) return false;
    const std::vector<int> digits = r.digits();
    return positional_value(digits, r.base) == r.value && to_digits(r.value, r.base) == digits;
  };
  if (!check_operand(s.first) || !check_operand(s.second)) return false;
  if (s.first.base != s.second.base) return false;
  if (std::tie(s.first.length, s.first.digit) < std::tie(s.second.length, s.second.digit))
    return false;
  const Natural sum = s.first.value + s.second.value;
  return s.root * s.root == sum && isqrt(sum) == s.root;
}

void sort_solutions(std::vector<Solution>& solutions) {
  std::sort(solutions.begin(), solutions.end(), [](const Solution& x, const Solution& y) {
    if (x.root != y.root) return x.root < y.root;
    const auto kx = std::tie(x.first.length, x.first.digit, x.second.length, x.second.digit);
    const auto ky = std::tie(y.first.length, y.first.digit, y.second.length, y.second.digit);
    return kx > ky;
  });
}

EnumerationResult enumerate_pairs(int min_length, int max_length, int base, unsigned workers) {
  if (base < 2) throw std::invalid_argument("base must be at least 2");
  if (min_length < 1 || max_length < min_length)
    throw std::invalid_argument("need 1 <= min_length <= max_length");
  EnumerationResult result;
  result.min_length = min_length;
  result.max_length = max_length;
  result.base = base;

  std::vector<Repdigit> numbers;
  for (int len = min_length; len <= max_length; ++len)
    for (int d = 1; d < base; ++d)
      numbers.push_back(Repdigit::make(d, len, base, LengthPolicy::AllowSingleDigit));
  result.repdigits_examined = numbers.size();
  result.pairs_examined = numbers.size() * (numbers.size() + 1) / 2;

  // Row i pairs numbers[i] with numbers[j], j >= i.
  auto rows = parallel_map(numbers.size(), workers, [&](std::size_t i) {
    std::vector<Solution> hits;
    for (std::size_t j = i; j < numbers.size(); ++j)
      if (auto root = is_perfect_square(numbers[i].value + numbers[j].value))
        hits.push_back(make_solution(numbers[i], numbers[j], std::move(*root)));
    return hits;
  });
  for (auto& row : rows)
    for (auto& s : row) {
      if (s.second.length < 2)
        result.single_digit_hits.push_back(std::move(s));
      else
        result.solutions.push_back(std::move(s));
    }
  sort_solutions(result.solutions);
  sort_solutions(result.single_digit_hits);
  return result;
}

EnumerationResult enumerate_solutions(int max_digits, int base, unsigned workers) {
  if (max_digits < 2) throw std::invalid_argument("max_digits must be at least 2");
  return enumerate_pairs(1, max_digits, base, workers);
}

bool matches_known_solutions(const std::vector<Solution>& solutions) {
  const auto& golden = golden::known_solutions();
  if (solutions.size() != golden.size()) return false;
  for (std::size_t i = 0; i < golden.size(); ++i) {
    const auto& s = solutions[i];
    const auto& g = golden[i];
    if (s.first.base != 10 || s.first.digit != g.a || s.first.length != g.m ||
        s.second.digit != g.b || s.second.length != g.n || s.root != g.root ||
        s.sum() != g.square)
      return false;
  }
  return true;
}

std::vector<int> direct_scan(const CaseFamily& family, int lo, int hi) {
  std::vector<int> squares;
  for (int m = lo; m <= hi; ++m)
    if (is_perfect_square(family.value(m))) squares.push_back(m);
  return squares;
}

bool table_a_matches_golden(const TableA& table) {
  const auto& g = golden::table_a();
  const auto rows = table.render_rows();
  for (std::size_t i = 0; i < table.sums.size(); ++i) {
    const auto it = g.rows.find(table.sums[i]);
    if (it == g.rows.end()) return false;
    // Only the columns the shipped table has are compared.
    for (std::size_t j = 0; j < table.exponents.size(); ++j) {
      const auto col = std::find(g.exponents.begin(), g.exponents.end(), table.exponents[j]);
      if (col == g.exponents.end()) continue;
      if (it->second[static_cast<std::size_t>(col - g.exponents.begin())] != rows[i][j])
        return false;
    }
  }
  return g.rows.size() == table.sums.size();
}

namespace {

std::vector<ResidualObligation> residual_obligations(const Certificate& cert, const Natural& N0,
                                                     const Natural& N1, const Natural& N2) {
  std::vector<ResidualObligation> out;
  const std::uint64_t L = cert.combined_period;
  const std::uint64_t modulus = std::lcm(L, std::uint64_t{3});
  const Natural* Ns[3] = {&N0, &N1, &N2};
  for (int r = 0; r < 3; ++r) {
    ResidualObligation ob;
    ob.family = cert.family;
    ob.r = r;
    ob.N = *Ns[r];
    ob.modulus = modulus;
    ob.start = cert.periodic_start;
    ob.direct_checked_through = cert.direct_check_bound;
    for (std::uint64_t c : cert.surviving_classes)
      for (std::uint64_t lift = c; lift < modulus; lift += L)
        if (lift % 3 == static_cast<std::uint64_t>(r)) ob.classes.push_back(lift);
    std::sort(ob.classes.begin(), ob.classes.end());
    // Head values are finitely many and all at or below the direct-check bound
    // in practice; only those beyond it remain obligations.
    for (int m : cert.surviving_head)
      if (m % 3 == r && static_cast<std::uint64_t>(m) > cert.direct_check_bound)
        ob.head.push_back(m);
    if (!ob.classes.empty() || !ob.head.empty()) out.push_back(std::move(ob));
  }
  return out;
}

}  // namespace

bool FullReport::consistent() const {
  const bool scans_clean = std::all_of(direct_scans.begin(), direct_scans.end(),
                                       [](const auto& d) { return d.squares.empty(); });
  return table_a_matches && survivors_match && scans_clean && mordell.all_agree() &&
         known_solutions_match;
}

FullReport full_report(const ReportConfig& config) {
  FullReport rep;
  rep.config = config;
  rep.table = table_a(6, config.ceiling);
  rep.table_a_matches = table_a_matches_golden(rep.table);

  ReduceConfig rc;
  rc.m_min = config.m_min;
  rc.repair_pool = config.repair_pool;
  rc.ceiling = config.ceiling;
  rep.reduction = reduce_all(rc);
  rep.survivors_match = rep.reduction.survivors == expected_survivors(config.m_min);

  CertifyOptions co;
  co.period_cap = config.period_cap;
  co.ceiling = config.ceiling;
  co.workers = config.workers;
  for (const auto& f : rep.reduction.survivors) {
    rep.certificates.push_back(certify_family(f, config.pool, config.direct_bound, co));
    rep.direct_scans.push_back({f, config.m_min, static_cast<int>(config.direct_bound),
                                direct_scan(f, config.m_min, static_cast<int>(config.direct_bound))});
  }

  ScanOptions so = config.scan;
  so.workers = config.workers;
  rep.mordell = reproduce_table_b(config.x_scan_bound, config.p_max, so);

  rep.enumeration = enumerate_solutions(config.max_digits, config.base, config.workers);
  rep.known_solutions_match = config.max_digits == 5 && config.base == 10 &&
                         matches_known_solutions(rep.enumeration.solutions);

  for (const auto& cert : rep.certificates) {
    if (cert.status() == Certificate::Status::Certified) continue;
    const auto ob = residual_obligations(cert, build_instance(cert.family, 0).N,
                                         build_instance(cert.family, 1).N,
                                         build_instance(cert.family, 2).N);
    rep.obligations.insert(rep.obligations.end(), ob.begin(), ob.end());
  }
  return rep;
}

}  // namespace repsq
