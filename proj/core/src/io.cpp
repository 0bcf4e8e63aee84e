#include "repsq/io.hpp"

#include <algorithm>
#include <sstream>

namespace repsq::io {
namespace {

std::string str(const Integer& v) { return to_string(v); }

template <typename T>
json numbers(const std::vector<T>& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(x);
  return a;
}

json strings(const std::vector<Integer>& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(str(x));
  return a;
}

std::string join(const std::vector<Integer>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + str(v[i]);
  return s.empty() ? "none" : s;
}

std::string solution_equation(const Solution& s) {
  std::ostringstream os;
  const auto side = [&](const Repdigit& r) {
    return std::string(static_cast<std::size_t>(r.length), '0' + static_cast<char>(r.digit));
  };
  if (s.first.base == 10 || s.first.base <= 10) {
    os << side(s.first) << " + " << side(s.second);
    if (s.first.base != 10) os << " (base " << s.first.base << ")";
  } else {
    os << s.first.label() << " + " << s.second.label();
  }
  os << " = " << str(s.sum()) << " = " << str(s.root) << "^2";
  return os.str();
}

}  // namespace

json to_json(const CaseFamily& f) {
  return {{"a", f.a}, {"b", f.b}, {"n", f.n}, {"label", f.label()}};
}

json to_json(const TableA& t) {
  json rows = json::array();
  const auto rendered = t.render_rows();
  for (std::size_t i = 0; i < t.sums.size(); ++i) {
    json cells = json::array();
    for (char ch : rendered[i]) cells.push_back(std::string(1, ch));
    rows.push_back({{"value", -t.sums[i]}, {"entries", cells}});
  }
  json moduli = json::array();
  for (int k : t.exponents) moduli.push_back("10^" + std::to_string(k));
  return {{"columns", moduli}, {"exponents", numbers(t.exponents)}, {"rows", rows}};
}

json to_json(const SieveReport& r) {
  json classes = json::array();
  for (const auto& c : r.classes)
    classes.push_back({{"c", c.c}, {"residue", c.residue}, {"eliminated", c.eliminated}});
  json head = json::array();
  for (const auto& h : r.head)
    head.push_back({{"m", h.m}, {"residue", h.residue}, {"eliminated", h.eliminated}});
  return {{"family", to_json(r.family)}, {"modulus", r.modulus},  {"preperiod", r.preperiod},
          {"period", r.period},          {"start", r.start()},    {"classes", classes},
          {"head", head},                {"eliminates_all", r.eliminates_all()}};
}

json to_json(const Certificate& c) {
  json entries = json::array();
  for (const auto& e : c.entries)
    entries.push_back({{"modulus", e.modulus},
                       {"preperiod", e.preperiod},
                       {"period", e.period},
                       {"eliminated_classes", numbers(e.eliminated_classes)},
                       {"eliminated_head", numbers(e.eliminated_head)}});
  const bool certified = c.status() == Certificate::Status::Certified;
  return {{"family", to_json(c.family)},
          {"m_min", c.family.m_min},
          {"status", certified ? "certified" : "uncertified"},
          {"entries", entries},
          {"periodic_start", c.periodic_start},
          {"combined_period", c.combined_period},
          {"surviving_head", numbers(c.surviving_head)},
          {"surviving_classes", numbers(c.surviving_classes)},
          {"direct_check",
           {{"bound", c.direct_check_bound},
            {"checked", c.direct_checked},
            {"squares", numbers(c.direct_squares)}}}};
}

json to_json(const ReductionReport& r) {
  json verdicts = json::array();
  for (const auto& v : r.funnel_verdicts)
    verdicts.push_back({{"family", to_json(v.family)},
                        {"modulus", v.modulus},
                        {"residue", v.residue},
                        {"scaled_residue", v.scaled_residue},
                        {"quadratic_residue", v.quadratic_residue}});
  json repairs = json::array();
  for (const auto& v : r.repair_verdicts)
    repairs.push_back({{"family", to_json(v.family)},
                       {"modulus", v.modulus},
                       {"period", v.period},
                       {"eliminated_classes", v.eliminated_classes},
                       {"eliminates_all", v.eliminates_all}});
  json fates = json::array();
  for (const auto& f : r.fates) {
    json j = {{"family", to_json(f.family)}, {"stage", to_string(f.stage)}, {"reason", f.reason}};
    if (f.modulus) j["modulus"] = *f.modulus;
    if (f.reduced_to) j["reduced_to"] = to_json(*f.reduced_to);
    fates.push_back(std::move(j));
  }
  json max_n = json::object();
  for (const auto& [s, n] : r.max_n_by_sum) max_n[std::to_string(s)] = n;
  json survivors = json::array();
  for (const auto& f : r.survivors) survivors.push_back(to_json(f));
  return {{"m_min", r.config.m_min},
          {"length_bound", r.global_length_bound},
          {"admissible_sums", numbers(r.admissible_sums)},
          {"max_n_by_sum", max_n},
          {"funnel_modulus", r.config.funnel_modulus},
          {"funnel_verdicts", verdicts},
          {"repair_pool", numbers(r.config.repair_pool)},
          {"repair_verdicts", repairs},
          {"fates", fates},
          {"survivors", survivors}};
}

json to_json(const MordellReport& r) {
  json points = json::array();
  for (const auto& p : r.points) points.push_back({{"x", str(p.x)}, {"y", str(p.y)}});
  json matches = json::array();
  for (const auto& m : r.form_matches)
    matches.push_back({{"l", m.l},
                       {"m", m.m},
                       {"k", str(m.k)},
                       {"x", str(m.x)},
                       {"valid_repdigit", m.valid_repdigit},
                       {"below_m_min", m.below_m_min},
                       {"verified", m.verified}});
  json out = {{"family", to_json(r.instance.family)},
              {"r", r.instance.r},
              {"N", str(r.instance.N)},
              {"multiplier", str(r.instance.multiplier)},
              {"x_form", r.instance.x_form()},
              {"y_form", r.instance.y_form()},
              {"points", points},
              {"form_matches", matches},
              {"scan_bound", r.scan_bound},
              {"p_max", r.p_max},
              {"table_b_agreement", r.table_b_agreement()}};
  if (r.golden) {
    json listed = json::array();
    for (const auto& lp : r.listed) {
      json j = {{"x", str(lp.x)},
                {"on_curve", lp.y.has_value()},
                {"within_scan", lp.within_scan},
                {"found_by_scan", lp.found_by_scan}};
      if (lp.y) j["y"] = str(*lp.y);
      listed.push_back(std::move(j));
    }
    out["table_b"] = {{"N", str(r.golden->N)},
                      {"N_matches", r.n_matches},
                      {"listed", listed},
                      {"bold", strings(r.golden->bold)},
                      {"bold_matches", r.bold_matches},
                      {"unlisted_found", strings(r.unlisted_found)},
                      {"no_in_form_extras", r.no_in_form_extras}};
  }
  return out;
}

json to_json(const Solution& s) {
  return {{"base", s.first.base},   {"a", s.first.digit}, {"m", s.first.length},
          {"b", s.second.digit},    {"n", s.second.length}, {"sum", str(s.sum())},
          {"root", str(s.root)}};
}

json to_json(const EnumerationResult& e) {
  json sols = json::array();
  for (const auto& s : e.solutions) sols.push_back(to_json(s));
  json excluded = json::array();
  for (const auto& s : e.single_digit_hits) excluded.push_back(to_json(s));
  return {{"base", e.base},
          {"min_length", e.min_length},
          {"max_length", e.max_length},
          {"repdigits_examined", e.repdigits_examined},
          {"pairs_examined", e.pairs_examined},
          {"solutions", sols},
          {"single_digit_hits", excluded}};
}

json to_json(const IdentityCheck& c) {
  json ops = json::array();
  for (const auto& o : c.operands) ops.push_back({{"digit", o.digit}, {"length", o.length}});
  return {{"identity", to_string(c.id)}, {"base", c.base},          {"parameter", c.parameter},
          {"operands", ops},             {"lhs", str(c.lhs)},       {"root", str(c.root)},
          {"rhs", str(c.rhs)},           {"digits_legal", c.digits_legal}, {"pass", c.pass}};
}

json to_json(const ResidualObligation& o) {
  return {{"family", to_json(o.family)},
          {"r", o.r},
          {"N", str(o.N)},
          {"modulus", o.modulus},
          {"start", o.start},
          {"class_count", o.classes.size()},
          {"classes", numbers(o.classes)},
          {"head", numbers(o.head)},
          {"direct_checked_through", o.direct_checked_through},
          {"rests_on", "completeness of the integer points of y^2 = x^3 + N"}};
}

json to_json(const FullReport& r) {
  json certs = json::array();
  for (const auto& c : r.certificates) certs.push_back(to_json(c));
  json scans = json::array();
  for (const auto& d : r.direct_scans)
    scans.push_back({{"family", to_json(d.family)},
                     {"from_m", d.lo},
                     {"to_m", d.hi},
                     {"squares", numbers(d.squares)}});
  json mordell = json::array();
  for (const auto& m : r.mordell.rows) mordell.push_back(to_json(m));
  json obligations = json::array();
  for (const auto& o : r.obligations) obligations.push_back(to_json(o));
  return {{"config",
           {{"m_min", r.config.m_min},
            {"pool_size", r.config.pool.size()},
            {"repair_pool", numbers(r.config.repair_pool)},
            {"direct_bound", r.config.direct_bound},
            {"x_scan_bound", r.config.x_scan_bound},
            {"p_max", r.config.p_max},
            {"max_digits", r.config.max_digits},
            {"base", r.config.base},
            {"period_cap", r.config.period_cap}}},
          {"table_a", to_json(r.table)},
          {"table_a_matches", r.table_a_matches},
          {"reduction", to_json(r.reduction)},
          {"survivors_match", r.survivors_match},
          {"certificates", certs},
          {"direct_scans", scans},
          {"mordell", mordell},
          {"table_b_agreement", r.mordell.all_agree()},
          {"enumeration", to_json(r.enumeration)},
          {"known_solutions_match", r.known_solutions_match},
          {"residual_obligations", obligations},
          {"claim",
           "Desk-scale verification only. Completeness of the Mordell integer-point "
           "lists is inherited, not proved; see residual_obligations."},
          {"consistent", r.consistent()}};
}

std::string solutions_csv(const std::vector<Solution>& solutions, bool with_base) {
  std::ostringstream os;
  os << (with_base ? "base,a,m,b,n,sum,root\n" : "a,m,b,n,sum,root\n");
  for (const auto& s : solutions) {
    if (with_base) os << s.first.base << ',';
    os << s.first.digit << ',' << s.first.length << ',' << s.second.digit << ','
       << s.second.length << ',' << str(s.sum()) << ',' << str(s.root) << '\n';
  }
  return os.str();
}

std::string render(const TableA& t) {
  std::ostringstream os;
  os << "-(a+b)";
  for (int k : t.exponents) os << "  10^" << k;
  os << '\n';
  const auto rows = t.render_rows();
  for (std::size_t i = 0; i < t.sums.size(); ++i) {
    std::string label = "-" + std::to_string(t.sums[i]);
    os << label << std::string(6 - std::min<std::size_t>(6, label.size()), ' ');
    for (char ch : rows[i]) os << "     " << ch;
    os << '\n';
  }
  return os.str();
}

std::string render(const SieveReport& r) {
  std::ostringstream os;
  os << r.family.label() << " mod " << r.modulus << ": preperiod " << r.preperiod << ", period "
     << r.period << ", " << r.eliminated_class_count() << "/" << r.period
     << " classes eliminated" << (r.eliminates_all() ? " (family eliminated)" : "") << '\n';
  for (const auto& h : r.head)
    os << "  m = " << h.m << ": residue " << h.residue << (h.eliminated ? "  non-residue" : "  residue")
       << '\n';
  if (r.period <= 64)
    for (const auto& c : r.classes)
      os << "  m = " << c.c << " mod " << r.period << ": residue " << c.residue
         << (c.eliminated ? "  non-residue" : "  residue") << '\n';
  return os.str();
}

std::string render(const Certificate& c) {
  std::ostringstream os;
  const bool certified = c.status() == Certificate::Status::Certified;
  os << "certificate for " << c.family.label() << " (m >= " << c.family.m_min << "): "
     << (certified ? "CERTIFIED" : "UNCERTIFIED") << '\n';
  for (const auto& e : c.entries) {
    os << "  mod " << e.modulus << " (period " << e.period << "): eliminates "
       << e.eliminated_classes.size() << " classes";
    if (!e.eliminated_head.empty()) os << " and " << e.eliminated_head.size() << " head values";
    os << '\n';
  }
  if (!certified) {
    os << "  surviving: " << c.surviving_classes.size() << " classes mod " << c.combined_period
       << " for m >= " << c.periodic_start;
    if (!c.surviving_head.empty()) os << ", " << c.surviving_head.size() << " head values";
    os << '\n';
    if (c.surviving_classes.size() <= 16) {
      os << "   ";
      for (auto v : c.surviving_classes) os << ' ' << v;
      os << '\n';
    }
  }
  os << "  direct check up to m = " << c.direct_check_bound << ": " << c.direct_checked
     << " surviving m tested, " << c.direct_squares.size() << " squares\n";
  return os.str();
}

std::string render(const ReductionReport& r, bool show_verdicts) {
  std::ostringstream os;
  os << "length bound: -(a+b) is never a square mod 10^" << r.global_length_bound
     << ", so the shorter repdigit has n < " << r.global_length_bound << '\n';
  os << "mod 10^2 admits a+b in {";
  for (std::size_t i = 0; i < r.admissible_sums.size(); ++i)
    os << (i ? ", " : "") << r.admissible_sums[i];
  os << "}\n";
  for (const auto& [s, n] : r.max_n_by_sum) os << "  a+b = " << s << ": n <= " << n << '\n';
  if (show_verdicts) {
    os << "residues mod " << r.config.funnel_modulus << " (9*(a_m + b_n), m >= " << r.config.m_min
       << "):\n";
    for (const auto& v : r.funnel_verdicts)
      os << "  " << v.family.label() << ": " << v.scaled_residue
         << (v.quadratic_residue ? " is a quadratic residue" : " is a quadratic non-residue")
         << '\n';
    if (!r.repair_verdicts.empty()) os << "repair moduli:\n";
    for (const auto& v : r.repair_verdicts)
      os << "  " << v.family.label() << " mod " << v.modulus << ": " << v.eliminated_classes << "/"
         << v.period << " classes eliminated" << (v.eliminates_all ? " -> eliminated" : "")
         << '\n';
  }
  os << "fates:\n";
  for (const auto& f : r.fates)
    os << "  " << f.family.label() << ": " << to_string(f.stage) << " (" << f.reason << ")\n";
  os << "survivors:";
  for (const auto& f : r.survivors) os << ' ' << f.label();
  os << '\n';
  return os.str();
}

std::string render(const MordellReport& r) {
  std::ostringstream os;
  const auto& inst = r.instance;
  os << inst.family.label() << ", m = 3l + " << inst.r << ": y^2 = x^3 + " << str(inst.N)
     << "  (x = " << inst.x_form() << ", y = " << inst.y_form() << ", multiplier "
     << str(inst.multiplier) << ")\n";
  std::vector<Integer> xs;
  for (const auto& p : r.points) xs.push_back(p.x);
  os << "  integer points with x <= " << r.scan_bound << ": " << join(xs) << '\n';
  for (const auto& m : r.form_matches)
    os << "  in-form x = " << str(m.x) << ": l = " << m.l << ", m = " << m.m << ", k = " << str(m.k)
       << (m.valid_repdigit ? "" : "  [m < 2: not a repdigit]")
       << (m.verified ? "" : "  [does not re-verify]") << '\n';
  if (r.form_matches.empty()) os << "  no in-form x up to 10^" << r.p_max << '\n';
  if (r.golden) {
    os << "  Table B: N " << (r.n_matches ? "matches" : "DIFFERS") << ", listed x = "
       << join(r.golden->x_coords) << ", agreement " << (r.table_b_agreement() ? "yes" : "NO")
       << '\n';
    for (const auto& lp : r.listed)
      if (!lp.within_scan)
        os << "    x = " << str(lp.x) << " beyond scan bound, on curve: "
           << (lp.y ? "yes (y = " + str(*lp.y) + ")" : std::string("NO")) << '\n';
    if (!r.unlisted_found.empty()) os << "    unlisted points: " << join(r.unlisted_found) << '\n';
  }
  return os.str();
}

std::string describe(const Solution& s) { return solution_equation(s); }

std::string render(const EnumerationResult& e) {
  std::ostringstream os;
  os << "base " << e.base << ", lengths " << e.min_length << ".." << e.max_length << ": "
     << e.repdigits_examined << " numbers, " << e.pairs_examined << " pairs examined\n";
  for (const auto& s : e.solutions) os << "  " << solution_equation(s) << '\n';
  if (!e.single_digit_hits.empty()) {
    os << "excluded (one operand has a single digit):\n";
    for (const auto& s : e.single_digit_hits) os << "  " << solution_equation(s) << '\n';
  }
  return os.str();
}

std::string render(const std::vector<IdentityCheck>& checks) {
  std::ostringstream os;
  std::size_t passed = 0;
  for (const auto& c : checks) {
    passed += c.pass && c.digits_legal;
    if (c.id == IdentityId::TwoDigitFamily && checks.size() > 12 && c.parameter > 3) continue;
    os << "  " << to_string(c.id) << " base " << c.base;
    if (c.parameter) os << " param " << c.parameter;
    os << ": ";
    for (std::size_t i = 0; i < c.operands.size(); ++i)
      os << (i ? " + " : "") << c.operands[i].digit << "_" << c.operands[i].length;
    os << " = " << str(c.lhs) << " vs " << str(c.root) << "^2 = " << str(c.rhs)
       << (c.pass ? "  ok" : "  FAIL") << (c.digits_legal ? "" : "  [illegal digit]") << '\n';
  }
  os << passed << "/" << checks.size() << " identity checks pass with legal digits\n";
  return os.str();
}

std::string render(const FullReport& r) {
  std::ostringstream os;
  os << "== Table A ==\n" << render(r.table) << "matches shipped table: "
     << (r.table_a_matches ? "yes" : "NO") << "\n\n";
  os << "== Case reduction ==\n" << render(r.reduction, false)
     << "matches expected survivors: " << (r.survivors_match ? "yes" : "NO") << "\n\n";
  os << "== Certificates ==\n";
  for (const auto& c : r.certificates) os << render(c);
  os << "\n== Direct scans ==\n";
  for (const auto& d : r.direct_scans)
    os << "  " << d.family.label() << ", m in [" << d.lo << ", " << d.hi << "]: "
       << (d.squares.empty() ? "no squares" : std::to_string(d.squares.size()) + " squares")
       << '\n';
  os << "\n== Mordell curves ==\n";
  for (const auto& m : r.mordell.rows) os << render(m);
  os << "Table B agreement: " << (r.mordell.all_agree() ? "yes" : "NO") << "\n\n";
  os << "== Enumeration ==\n" << render(r.enumeration)
     << "matches the known solution list: " << (r.known_solutions_match ? "yes" : "NO") << "\n\n";
  os << "== Residual obligations ==\n";
  for (const auto& o : r.obligations)
    os << "  " << o.family.label() << ", r = " << o.r << ": " << o.classes.size()
       << " classes mod " << o.modulus << " beyond m = " << o.direct_checked_through
       << " rest on the integer points of y^2 = x^3 + " << str(o.N) << '\n';
  os << "\nThis is a desk-scale verification. The integer-point lists of the Mordell\n"
        "curves are checked by membership and bounded scan, not proved complete.\n";
  return os.str();
}

}  // namespace repsq::io
