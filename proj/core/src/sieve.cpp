#include "repsq/sieve.hpp"

#include "repsq/parallel.hpp"
#include "repsq/repdigit.hpp"

#include <algorithm>
#include <bitset>
#include <numeric>
#include <stdexcept>

namespace repsq {

void CaseFamily::validate() const {
  if (a < 1 || a > 9 || b < 1 || b > 9)
    throw std::invalid_argument("family digits must be in 1..9: " + label());
  if (n < 2) throw std::invalid_argument("fixed repdigit needs n >= 2: " + label());
  if (m_min < n) throw std::invalid_argument("family requires m_min >= n: " + label());
}

Natural CaseFamily::fixed_value() const { return repdigit_value(b, n); }

Natural CaseFamily::value(int m) const {
  if (m < 0) throw std::invalid_argument("negative repdigit length");
  // a_0 = 0 so the Mordell correspondence m = 3l + r is total.
  return a * ((pow_natural(10, static_cast<unsigned>(m)) - 1) / 9) + fixed_value();
}

std::string CaseFamily::label() const {
  return std::to_string(a) + "_m+" + std::string(static_cast<std::size_t>(std::max(n, 0)),
                                                 static_cast<char>('0' + b));
}

CaseFamily parse_family(const std::string& text, int m_min) {
  const auto plus = text.find('+');
  if (plus == std::string::npos || plus == 0 || plus + 1 >= text.size())
    throw std::invalid_argument("family must look like 8+33, got '" + text + "'");
  const std::string lhs = text.substr(0, plus);
  const std::string rhs = text.substr(plus + 1);
  if (lhs.size() != 1 || lhs[0] < '1' || lhs[0] > '9')
    throw std::invalid_argument("varying digit must be a single digit 1..9: '" + lhs + "'");
  if (rhs.find_first_not_of(rhs[0]) != std::string::npos || rhs[0] < '1' || rhs[0] > '9')
    throw std::invalid_argument("fixed side must be a repdigit: '" + rhs + "'");
  CaseFamily f{lhs[0] - '0', rhs[0] - '0', static_cast<int>(rhs.size()), m_min};
  f.m_min = std::max(f.m_min, f.n);
  f.validate();
  return f;
}

std::uint64_t SieveReport::start() const {
  return std::max<std::uint64_t>(preperiod, static_cast<std::uint64_t>(family.m_min));
}

bool SieveReport::eliminates(std::uint64_t m) const {
  if (m < static_cast<std::uint64_t>(family.m_min))
    throw std::out_of_range("m below the family's m_min");
  if (m < start()) return head[m - static_cast<std::uint64_t>(family.m_min)].eliminated;
  return classes[m % period].eliminated;
}

std::uint64_t SieveReport::residue_at(std::uint64_t m) const {
  if (m < static_cast<std::uint64_t>(family.m_min))
    throw std::out_of_range("m below the family's m_min");
  if (m < start()) return head[m - static_cast<std::uint64_t>(family.m_min)].residue;
  return classes[m % period].residue;
}

bool SieveReport::eliminates_all() const {
  return std::all_of(head.begin(), head.end(), [](const auto& h) { return h.eliminated; }) &&
         std::all_of(classes.begin(), classes.end(),
                     [](const auto& c) { return c.eliminated; });
}

std::size_t SieveReport::eliminated_class_count() const {
  return static_cast<std::size_t>(
      std::count_if(classes.begin(), classes.end(), [](const auto& c) { return c.eliminated; }));
}

SieveReport sieve_family(const CaseFamily& family, std::uint64_t modulus,
                         std::uint64_t ceiling) {
  family.validate();
  const SquaresMod squares = squares_mod_cached(modulus, ceiling);
  const ResidueStructure shape = power_residue_structure(family.a, modulus);

  SieveReport report;
  report.family = family;
  report.modulus = modulus;
  report.preperiod = shape.preperiod;
  report.period = shape.period;

  const std::uint64_t fixed = repdigit_mod(family.b, static_cast<std::uint64_t>(family.n),
                                           modulus);
  const auto add = [&](std::uint64_t x) {
    return static_cast<std::uint64_t>((u128{x} + fixed) % modulus);
  };
  const auto m_min = static_cast<std::uint64_t>(family.m_min);
  const std::uint64_t start = report.start();

  std::uint64_t x = repdigit_mod(family.a, m_min, modulus);
  for (std::uint64_t m = m_min; m < start; ++m) {
    const std::uint64_t v = add(x);
    report.head.push_back({static_cast<int>(m), v, !squares.contains(v)});
    x = static_cast<std::uint64_t>((u128{x} * 10 + static_cast<std::uint64_t>(family.a)) %
                                   modulus);
  }
  report.classes.resize(shape.period);
  for (std::uint64_t j = 0; j < shape.period; ++j) {
    const std::uint64_t m = start + j;
    const std::uint64_t v = add(x);
    report.classes[m % shape.period] = {m % shape.period, v, !squares.contains(v)};
    x = static_cast<std::uint64_t>((u128{x} * 10 + static_cast<std::uint64_t>(family.a)) %
                                   modulus);
  }
  return report;
}

std::vector<std::uint64_t> default_modulus_pool() {
  constexpr std::uint64_t kLimit = 10'000;
  std::vector<bool> composite(kLimit + 1, false);
  std::vector<std::uint64_t> pool;
  for (std::uint64_t p = 2; p <= kLimit; ++p) {
    if (composite[p]) continue;
    for (std::uint64_t q = p * p; q <= kLimit; q += p) composite[q] = true;
    for (std::uint64_t pk = p; pk <= kLimit; pk *= p) pool.push_back(pk);
  }
  for (std::uint64_t m : {1'000ull, 10'000ull, 100'000ull, 1'000'000ull}) pool.push_back(m);
  std::sort(pool.begin(), pool.end());
  pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
  return pool;
}

bool Certificate::survives(std::uint64_t m) const {
  if (m < static_cast<std::uint64_t>(family.m_min)) return false;
  if (m < periodic_start)
    return std::binary_search(surviving_head.begin(), surviving_head.end(), static_cast<int>(m));
  return std::binary_search(surviving_classes.begin(), surviving_classes.end(),
                            m % combined_period);
}

namespace {

// Individual m values below any periodic start. Preperiods of a_m mod M are at
// most the 2- or 5-adic valuation of M, far below this for M <= 2^64.
constexpr std::size_t kHeadWindow = 128;

struct ReportSummary {
  std::uint64_t modulus = 0;
  std::uint64_t preperiod = 0;
  std::uint64_t period = 1;
  std::uint64_t start = 0;
  std::bitset<kHeadWindow> head_eliminated;  // bit i: m = m_min + i
  std::vector<bool> class_eliminated;
  bool any_class_eliminated = false;
};

ReportSummary summarize(const SieveReport& r) {
  ReportSummary s;
  s.modulus = r.modulus;
  s.preperiod = r.preperiod;
  s.period = r.period;
  s.start = r.start();
  const auto m_min = static_cast<std::uint64_t>(r.family.m_min);
  for (std::size_t i = 0; i < kHeadWindow; ++i) s.head_eliminated[i] = r.eliminates(m_min + i);
  s.class_eliminated.resize(r.period);
  for (const auto& c : r.classes) {
    s.class_eliminated[c.c] = c.eliminated;
    s.any_class_eliminated = s.any_class_eliminated || c.eliminated;
  }
  return s;
}

}  // namespace

Certificate certify_family(const CaseFamily& family, const std::vector<std::uint64_t>& pool,
                           std::uint64_t direct_bound, const CertifyOptions& options) {
  family.validate();
  for (std::uint64_t m : pool) {
    if (m > options.ceiling)
      throw BoundError("pool modulus " + std::to_string(m) + " exceeds ceiling");
  }
  const auto m_min = static_cast<std::uint64_t>(family.m_min);

  Certificate cert;
  cert.family = family;
  cert.direct_check_bound = direct_bound;
  cert.periodic_start = m_min;

  std::vector<std::uint64_t> survivors{0};
  std::uint64_t period = 1;
  std::vector<ReportSummary> summaries;
  summaries.reserve(pool.size());

  // Reports are computed in parallel batches and merged strictly in pool order.
  const std::size_t batch = std::max<std::size_t>(1, std::size_t{options.workers} * 4);
  for (std::size_t lo = 0; lo < pool.size(); lo += batch) {
    const std::size_t count = std::min(batch, pool.size() - lo);
    auto batch_summaries = parallel_map(count, options.workers, [&](std::size_t i) {
      return summarize(sieve_family(family, pool[lo + i], options.ceiling));
    });
    for (auto& s : batch_summaries) {
      summaries.push_back(s);
      if (survivors.empty() || !s.any_class_eliminated) continue;
      const std::uint64_t merged = std::lcm(period, s.period);
      if (merged > options.period_cap) continue;
      std::vector<std::uint64_t> next;
      for (std::uint64_t c : survivors)
        for (std::uint64_t lift = c; lift < merged; lift += period)
          if (!s.class_eliminated[lift % s.period]) next.push_back(lift);
      if (next.size() == survivors.size() * (merged / period)) continue;  // removed nothing
      std::sort(next.begin(), next.end());
      survivors = std::move(next);
      period = merged;
      cert.periodic_start = std::max(cert.periodic_start, s.start);

      CertificateEntry entry{s.modulus, s.preperiod, s.period, {}, {}};
      for (std::uint64_t c = 0; c < s.period; ++c)
        if (s.class_eliminated[c]) entry.eliminated_classes.push_back(c);
      cert.entries.push_back(std::move(entry));
    }
  }
  cert.combined_period = period;
  cert.surviving_classes = std::move(survivors);
  if (cert.periodic_start - m_min > kHeadWindow)
    throw std::logic_error("sieve preperiod exceeds the head window");

  // Head values are covered by whichever pool modulus eliminates them first.
  for (std::uint64_t m = m_min; m < cert.periodic_start; ++m) {
    const std::size_t bit = m - m_min;
    const auto hit = std::find_if(summaries.begin(), summaries.end(),
                                  [&](const auto& s) { return s.head_eliminated[bit]; });
    if (hit == summaries.end()) {
      cert.surviving_head.push_back(static_cast<int>(m));
      continue;
    }
    auto entry = std::find_if(cert.entries.begin(), cert.entries.end(),
                              [&](const auto& e) { return e.modulus == hit->modulus; });
    if (entry == cert.entries.end()) {
      cert.entries.push_back({hit->modulus, hit->preperiod, hit->period, {}, {}});
      entry = std::prev(cert.entries.end());
    }
    entry->eliminated_head.push_back(static_cast<int>(m));
  }

  for (std::uint64_t m = m_min; m <= direct_bound; ++m) {
    if (!cert.survives(m)) continue;
    ++cert.direct_checked;
    if (is_perfect_square(family.value(static_cast<int>(m))))
      cert.direct_squares.push_back(static_cast<int>(m));
  }
  return cert;
}

}  // namespace repsq
