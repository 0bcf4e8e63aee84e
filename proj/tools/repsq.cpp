// repsq: command-line front end for the repdigit-square pipeline.
//
// Exit codes: 0 success / golden match, 2 golden mismatch, 3 rejected
// configuration (bad flags or a bound above its ceiling).

#include "repsq/classifier.hpp"
#include "repsq/golden.hpp"
#include "repsq/io.hpp"
#include "repsq/multibase.hpp"
#include "repsq/reduce.hpp"
#include "repsq/table_b.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using repsq::io::json;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 2;
constexpr int kExitRejected = 3;

constexpr std::uint64_t kDefaultScanBound = 2'000'000;
constexpr std::uint64_t kLongRunScanCeiling = std::uint64_t{1} << 41;

struct Common {
  std::string format = "text";
  unsigned workers = 1;
  std::string cache_dir;
};

class Rejected : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void emit_json(const json& j) { std::cout << j.dump(2) << '\n'; }

std::vector<std::uint64_t> parse_pool(const std::string& text) {
  std::vector<std::uint64_t> pool;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    unsigned long long v = 0;
    try {
      v = std::stoull(item, &used);
    } catch (const std::exception&) {
      throw Rejected("bad modulus '" + item + "' in pool");
    }
    if (used != item.size() || v < 2) throw Rejected("bad modulus '" + item + "' in pool");
    pool.push_back(v);
  }
  if (pool.empty()) throw Rejected("empty modulus pool");
  return pool;
}

std::string cache_dir(const Common& common) {
  if (!common.cache_dir.empty()) return common.cache_dir;
  if (const char* env = std::getenv("REPSQ_CACHE_DIR")) return env;
  return {};
}

// Progress for long scans goes to stderr so stdout stays pipeable.
repsq::ScanOptions scan_options(const Common& common, bool verbose) {
  repsq::ScanOptions so;
  so.workers = common.workers;
  so.cache_dir = cache_dir(common);
  if (verbose) {
    auto mu = std::make_shared<std::mutex>();
    so.progress = [mu](std::size_t done, std::size_t total) {
      std::lock_guard lock(*mu);
      std::cerr << "\rscan " << done << "/" << total << std::flush;
      if (done == total) std::cerr << '\n';
    };
  }
  return so;
}

void require_format(const Common& common, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed)
    if (common.format == f) return;
  throw Rejected("format '" + common.format + "' is not supported by this command");
}

int run_table_a(const Common& common, int max_exp) {
  require_format(common, {"text", "json"});
  const repsq::TableA table = repsq::table_a(max_exp);
  const bool ok = repsq::table_a_matches_golden(table);
  if (common.format == "json") {
    emit_json({{"command", "table-a"}, {"table", repsq::io::to_json(table)}, {"matches_golden", ok}});
  } else {
    std::cout << repsq::io::render(table)
              << (ok ? "matches the shipped Table A\n" : "DIFFERS from the shipped Table A\n");
  }
  return ok ? kExitOk : kExitMismatch;
}

int run_reduce(const Common& common, int m_min, bool show_verdicts, const std::string& pool) {
  require_format(common, {"text", "json"});
  repsq::ReduceConfig cfg;
  cfg.m_min = m_min;
  if (!pool.empty()) cfg.repair_pool = parse_pool(pool);
  const auto rep = repsq::reduce_all(cfg);
  const bool ok = rep.survivors == repsq::expected_survivors(m_min);
  if (common.format == "json") {
    emit_json({{"command", "reduce"}, {"reduction", repsq::io::to_json(rep)}, {"matches_expected", ok}});
  } else {
    std::cout << repsq::io::render(rep, show_verdicts)
              << (ok ? "survivors match the expected seven families\n"
                     : "survivors DIFFER from the expected seven families\n");
  }
  return ok ? kExitOk : kExitMismatch;
}

int run_sieve(const Common& common, const std::string& family, std::uint64_t modulus, int m_min) {
  require_format(common, {"text", "json"});
  const auto report = repsq::sieve_family(repsq::parse_family(family, m_min), modulus);
  if (common.format == "json")
    emit_json({{"command", "sieve"}, {"report", repsq::io::to_json(report)}});
  else
    std::cout << repsq::io::render(report);
  return kExitOk;
}

int run_certify(const Common& common, const std::string& family, const std::string& pool,
                std::uint64_t direct_bound, int m_min, std::uint64_t period_cap) {
  require_format(common, {"text", "json"});
  std::vector<repsq::CaseFamily> families;
  if (family.empty())
    families = repsq::expected_survivors(m_min);
  else
    families.push_back(repsq::parse_family(family, m_min));
  const auto moduli = pool.empty() ? repsq::default_modulus_pool() : parse_pool(pool);
  repsq::CertifyOptions opts;
  opts.period_cap = period_cap;
  opts.workers = common.workers;

  json certs = json::array();
  bool clean = true;
  std::string text;
  for (const auto& f : families) {
    const auto cert = repsq::certify_family(f, moduli, direct_bound, opts);
    clean = clean && cert.direct_squares.empty();
    certs.push_back(repsq::io::to_json(cert));
    text += repsq::io::render(cert);
  }
  if (common.format == "json")
    emit_json({{"command", "certify"}, {"pool_size", moduli.size()}, {"certificates", certs}});
  else
    std::cout << text;
  // A square at m >= m_min would contradict the classification.
  return clean ? kExitOk : kExitMismatch;
}

int run_mordell(const Common& common, const std::string& family, std::optional<int> r,
                std::uint64_t bound, int p_max, bool long_run) {
  require_format(common, {"text", "json"});
  const std::uint64_t ceiling = long_run ? kLongRunScanCeiling : kDefaultScanBound;
  if (bound > ceiling)
    throw repsq::BoundError("x-scan-bound " + std::to_string(bound) + " exceeds " +
                            std::to_string(ceiling) + (long_run ? "" : " (use --long-run)"));
  const auto so = scan_options(common, long_run);

  std::vector<repsq::MordellReport> rows;
  if (family.empty()) {
    for (const auto& row : repsq::golden::table_b())
      if (!r || row.r == *r) rows.push_back(repsq::mordell_report(row.family, row.r, bound, p_max, so));
  } else {
    const auto f = repsq::parse_family(family);
    for (int rr = 0; rr < 3; ++rr)
      if (!r || rr == *r) rows.push_back(repsq::mordell_report(f, rr, bound, p_max, so));
  }
  bool ok = true;
  for (const auto& row : rows) ok = ok && (!row.golden || row.table_b_agreement());

  if (common.format == "json") {
    json out = json::array();
    for (const auto& row : rows) out.push_back(repsq::io::to_json(row));
    emit_json({{"command", "mordell"}, {"rows", out}, {"all_agree", ok}});
  } else {
    for (const auto& row : rows) std::cout << repsq::io::render(row);
  }
  return ok ? kExitOk : kExitMismatch;
}

bool golden_prefix_matches(const std::vector<repsq::Solution>& sols, int max_digits) {
  std::vector<repsq::golden::SolutionRow> expected;
  for (const auto& g : repsq::golden::known_solutions())
    if (g.m <= max_digits && g.n <= max_digits) expected.push_back(g);
  if (expected.size() != sols.size()) return false;
  for (std::size_t i = 0; i < sols.size(); ++i) {
    const auto& s = sols[i];
    const auto& g = expected[i];
    if (s.first.digit != g.a || s.first.length != g.m || s.second.digit != g.b ||
        s.second.length != g.n || s.root != g.root)
      return false;
  }
  return true;
}

int run_classify(const Common& common, int max_digits, int base) {
  require_format(common, {"text", "json", "csv"});
  if (max_digits > 64) throw repsq::BoundError("max-digits above 64");
  const auto e = repsq::enumerate_solutions(max_digits, base, common.workers);
  // In base 10 every bound must reproduce the known solution list (restricted to
  // lengths <= max_digits); other bases have no reference list.
  const bool ok = base != 10 || golden_prefix_matches(e.solutions, max_digits);
  if (common.format == "json")
    emit_json({{"command", "classify"}, {"enumeration", repsq::io::to_json(e)}, {"matches_known_solutions", ok}});
  else if (common.format == "csv")
    std::cout << repsq::io::solutions_csv(e.solutions, false);
  else
    std::cout << repsq::io::render(e)
              << (base != 10 ? "" : ok ? "matches the known solution list\n" : "DIFFERS from the known solution list\n");
  return ok ? kExitOk : kExitMismatch;
}

int run_multibase(const Common& common, int base, int max_len, int max_len_ceiling,
                  bool identities, int from_base, int to_base) {
  require_format(common, {"text", "json", "csv"});
  repsq::ExploreOptions opts;
  opts.max_length_ceiling = max_len_ceiling;
  opts.workers = common.workers;

  if (identities) {
    if (from_base < 2 || to_base < from_base) throw Rejected("bad identity base range");
    json checks = json::array();
    std::size_t total = 0, failed = 0, illegal = 0;
    std::string text;
    for (int c = from_base; c <= to_base; ++c) {
      const auto cs = repsq::check_family_identities(c);
      for (const auto& chk : cs) {
        ++total;
        if (!chk.digits_legal)
          ++illegal;
        else if (!chk.pass)
          ++failed;
        if (common.format == "json") checks.push_back(repsq::io::to_json(chk));
      }
      if (from_base == to_base) text += repsq::io::render(cs);
    }
    if (common.format == "json")
      emit_json({{"command", "multibase"},
                 {"identities", checks},
                 {"checked", total},
                 {"failed", failed},
                 {"digit_illegal", illegal}});
    else
      std::cout << text << "bases " << from_base << ".." << to_base << ": " << total
                << " identity checks, " << failed << " failed, " << illegal
                << " with digits outside the base\n";
    return failed == 0 ? kExitOk : kExitMismatch;
  }

  const auto sols = repsq::explore(base, max_len, opts);
  bool ok = true;
  for (const auto& s : sols) ok = ok && repsq::verify_solution(s);
  if (common.format == "csv") {
    std::cout << repsq::io::solutions_csv(sols, true);
    return ok ? kExitOk : kExitMismatch;
  }
  json out = {{"command", "multibase"}, {"base", base}, {"max_len", max_len}};
  json arr = json::array();
  for (const auto& s : sols) arr.push_back(repsq::io::to_json(s));
  out["solutions"] = arr;
  std::string text;
  for (const auto& s : sols) text += "  " + repsq::io::describe(s) + "\n";
  if (base == 7) {
    const auto ex = repsq::base7_displayed_example();
    json found = nullptr;
    for (const auto& s : sols)
      if (s.sum() == ex.claimed_square) found = repsq::io::to_json(s);
    out["displayed_example"] = {{"text", ex.text},
                                {"displayed_value", repsq::to_string(ex.displayed_value)},
                                {"claimed_square", repsq::to_string(ex.claimed_square)},
                                {"claimed_root", repsq::to_string(ex.claimed_root)},
                                {"explorer_match", found}};
    text += "displayed " + ex.text + " evaluates to " + repsq::to_string(ex.displayed_value) +
            "; explorer representation of " + repsq::to_string(ex.claimed_square) + ": " +
            (found.is_null() ? std::string("not found within max-len")
                             : std::to_string(found["a"].get<int>()) + "_" +
                                   std::to_string(found["m"].get<int>()) + " + " +
                                   std::to_string(found["b"].get<int>()) + "_" +
                                   std::to_string(found["n"].get<int>())) +
            "\n";
  }
  if (common.format == "json")
    emit_json(out);
  else
    std::cout << "base " << base << ", lengths 2.." << max_len << ": " << sols.size()
              << " square sums\n"
              << text;
  return ok ? kExitOk : kExitMismatch;
}

int run_report(const Common& common, const repsq::ReportConfig& base_cfg, bool long_run) {
  require_format(common, {"text", "json"});
  repsq::ReportConfig cfg = base_cfg;
  const std::uint64_t ceiling = long_run ? kLongRunScanCeiling : kDefaultScanBound;
  if (cfg.x_scan_bound > ceiling) throw repsq::BoundError("x-scan-bound exceeds ceiling (use --long-run)");
  cfg.workers = common.workers;
  cfg.scan = scan_options(common, long_run);
  const auto rep = repsq::full_report(cfg);
  if (common.format == "json")
    emit_json({{"command", "report"}, {"report", repsq::io::to_json(rep)}});
  else
    std::cout << repsq::io::render(rep);
  return rep.consistent() ? kExitOk : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Perfect squares that are sums of two repdigits: sieves, Mordell curves, enumeration"};
  app.require_subcommand(1);

  Common common;
  app.add_option("--format", common.format, "Output format: text, json or csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--workers", common.workers, "Worker threads for scans")->check(CLI::Range(1u, 256u));
  app.add_option("--cache-dir", common.cache_dir, "Scan result cache (default: $REPSQ_CACHE_DIR)");

  int max_exp = 6;
  auto* table_cmd = app.add_subcommand("table-a", "Quadratic residues of -(a+b) modulo 10^k");
  table_cmd->add_option("--modulus-exp", max_exp, "Largest column exponent k")->check(CLI::Range(2, 7));

  int m_min = 6;
  bool show_verdicts = false;
  std::string pool;
  auto* reduce_cmd = app.add_subcommand("reduce", "Congruence case funnel down to the surviving families");
  reduce_cmd->add_option("--m-min", m_min, "Smallest m considered")->check(CLI::Range(2, 64));
  reduce_cmd->add_flag("--show-verdicts", show_verdicts, "Print every residue verdict");
  reduce_cmd->add_option("--pool", pool, "Repair moduli, comma separated (default 7,9)");

  std::string family;
  std::uint64_t modulus = 0;
  auto* sieve_cmd = app.add_subcommand("sieve", "Sieve one family with one modulus");
  sieve_cmd->add_option("--family", family, "Family such as 7+9999")->required();
  sieve_cmd->add_option("--modulus", modulus, "Modulus")->required();
  sieve_cmd->add_option("--m-min", m_min, "Smallest m considered")->check(CLI::Range(2, 64));

  std::uint64_t direct_bound = 200;
  std::uint64_t period_cap = 100'000;
  auto* certify_cmd = app.add_subcommand("certify", "Congruence certificates for surviving families");
  certify_cmd->add_option("--family", family, "Family such as 8+33 (default: all survivors)");
  certify_cmd->add_option("--pool", pool, "Moduli, comma separated (default: prime powers <= 10^4 and 10^3..10^6)");
  certify_cmd->add_option("--direct-bound", direct_bound, "Check surviving m directly up to this")
      ->check(CLI::Range(std::uint64_t{1}, std::uint64_t{5000}));
  certify_cmd->add_option("--m-min", m_min, "Smallest m considered")->check(CLI::Range(2, 64));
  certify_cmd->add_option("--period-cap", period_cap, "Largest combined period")
      ->check(CLI::Range(std::uint64_t{1}, std::uint64_t{10'000'000}));

  std::optional<int> r;
  std::uint64_t x_bound = kDefaultScanBound;
  int p_max = 30;
  bool long_run = false;
  auto* mordell_cmd = app.add_subcommand("mordell", "Mordell curves y^2 = x^3 + N and Table B");
  mordell_cmd->add_option("--family", family, "Family such as 8+33 (default: every Table B row)");
  mordell_cmd->add_option("--r", r, "Residue of m mod 3")->check(CLI::Range(0, 2));
  mordell_cmd->add_option("--x-scan-bound", x_bound, "Scan x up to this bound")
      ->check(CLI::PositiveNumber);
  mordell_cmd->add_option("--p-max", p_max, "Test x = a*10^p for p <= this")->check(CLI::Range(0, 1000));
  mordell_cmd->add_flag("--long-run", long_run, "Allow scan bounds above 2e6 (progress on stderr)");

  int max_digits = 5;
  int base = 10;
  auto* classify_cmd = app.add_subcommand("classify", "Exhaustive pair enumeration");
  classify_cmd->add_option("--max-digits", max_digits, "Largest repdigit length")->check(CLI::Range(2, 1000));
  classify_cmd->add_option("--base", base, "Base")->check(CLI::Range(2, 1'000'000));

  int max_len = 13;
  int max_len_ceiling = 64;
  bool identities = false;
  int from_base = 5, to_base = 1000;
  auto* multibase_cmd = app.add_subcommand("multibase", "Base-c identities and explorer");
  multibase_cmd->add_option("--base", base, "Base to explore")->check(CLI::Range(2, 1'000'000));
  multibase_cmd->add_option("--max-len", max_len, "Largest repdigit length")->check(CLI::Range(2, 100'000));
  multibase_cmd->add_option("--max-len-ceiling", max_len_ceiling, "Raise the 64-digit explorer ceiling");
  multibase_cmd->add_flag("--identities", identities, "Check the identity families instead of exploring");
  multibase_cmd->add_option("--from-base", from_base, "First base for --identities");
  multibase_cmd->add_option("--to-base", to_base, "Last base for --identities");

  repsq::ReportConfig report_cfg;
  auto* report_cmd = app.add_subcommand("report", "Full evidence chain");
  report_cmd->add_option("--m-min", report_cfg.m_min)->check(CLI::Range(2, 64));
  report_cmd->add_option("--direct-bound", report_cfg.direct_bound)
      ->check(CLI::Range(std::uint64_t{1}, std::uint64_t{5000}));
  report_cmd->add_option("--x-scan-bound", report_cfg.x_scan_bound)->check(CLI::PositiveNumber);
  report_cmd->add_option("--p-max", report_cfg.p_max)->check(CLI::Range(0, 1000));
  report_cmd->add_option("--period-cap", report_cfg.period_cap)
      ->check(CLI::Range(std::uint64_t{1}, std::uint64_t{10'000'000}));
  report_cmd->add_option("--pool", pool, "Certificate moduli, comma separated");
  report_cmd->add_flag("--long-run", long_run, "Allow scan bounds above 2e6");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitRejected;
  }

  try {
    if (*table_cmd) return run_table_a(common, max_exp);
    if (*reduce_cmd) return run_reduce(common, m_min, show_verdicts, pool);
    if (*sieve_cmd) return run_sieve(common, family, modulus, m_min);
    if (*certify_cmd) return run_certify(common, family, pool, direct_bound, m_min, period_cap);
    if (*mordell_cmd) return run_mordell(common, family, r, x_bound, p_max, long_run);
    if (*classify_cmd) return run_classify(common, max_digits, base);
    if (*multibase_cmd)
      return run_multibase(common, base, max_len, max_len_ceiling, identities, from_base, to_base);
    if (*report_cmd) {
      if (!pool.empty()) report_cfg.pool = parse_pool(pool);
      return run_report(common, report_cfg, long_run);
    }
  } catch (const repsq::BoundError& e) {
    std::cerr << "rejected: " << e.what() << '\n';
    return kExitRejected;
  } catch (const Rejected& e) {
    std::cerr << "rejected: " << e.what() << '\n';
    return kExitRejected;
  } catch (const std::invalid_argument& e) {
    std::cerr << "rejected: " << e.what() << '\n';
    return kExitRejected;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitMismatch;
  }
  return kExitRejected;
}
