#include "repsq/table_b.hpp"

#include <algorithm>
#include <set>

namespace repsq {

bool MordellReport::table_b_agreement() const {
  if (!golden) return false;
  const bool listed_ok = std::all_of(listed.begin(), listed.end(), [](const ListedPoint& p) {
    return p.y.has_value() && (!p.within_scan || p.found_by_scan);
  });
  return n_matches && listed_ok && unlisted_found.empty() && bold_matches && no_in_form_extras;
}

MordellReport mordell_report(const CaseFamily& family, int r, std::uint64_t scan_bound,
                             int p_max, const ScanOptions& options) {
  MordellReport rep;
  rep.instance = build_instance(family, r);
  rep.scan_bound = scan_bound;
  rep.p_max = p_max;
  rep.points = search_integer_points(rep.instance.N, scan_bound, options);
  rep.form_matches = form_search(rep.instance, p_max);
  for (const auto& p : rep.points)
    if (is_in_form(p.x, rep.instance)) rep.in_form_scan_points.push_back(p.x);

  const golden::TableBRow* row = golden::find_table_b(family, r);
  if (row == nullptr) return rep;
  rep.golden = *row;
  rep.n_matches = row->N == rep.instance.N;

  std::set<Integer> found;
  for (const auto& p : rep.points) found.insert(p.x);
  std::set<Integer> listed_set(row->x_coords.begin(), row->x_coords.end());
  for (const auto& x : row->x_coords) {
    ListedPoint lp;
    lp.x = x;
    if (auto p = point_at(x, rep.instance.N)) lp.y = p->y;
    lp.within_scan = x <= Integer(scan_bound);
    lp.found_by_scan = found.count(x) > 0;
    rep.listed.push_back(std::move(lp));
  }
  for (const auto& x : found)
    if (!listed_set.count(x)) rep.unlisted_found.push_back(x);

  std::set<Integer> bold(row->bold.begin(), row->bold.end());
  std::set<Integer> matched;
  for (const auto& m : rep.form_matches) matched.insert(m.x);
  rep.bold_matches = matched == bold;
  rep.no_in_form_extras = std::all_of(rep.in_form_scan_points.begin(),
                                      rep.in_form_scan_points.end(),
                                      [&](const Integer& x) { return bold.count(x) > 0; });
  return rep;
}

bool TableBReport::all_agree() const {
  return !rows.empty() && std::all_of(rows.begin(), rows.end(), [](const MordellReport& r) {
    return r.table_b_agreement();
  });
}

TableBReport reproduce_table_b(std::uint64_t x_scan_bound, int p_max,
                               const ScanOptions& options) {
  TableBReport report;
  for (const auto& row : golden::table_b())
    report.rows.push_back(mordell_report(row.family, row.r, x_scan_bound, p_max, options));
  return report;
}

}  // namespace repsq
