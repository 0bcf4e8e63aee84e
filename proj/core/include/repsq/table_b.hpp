#pragma once
// Per-(family, r) Mordell reports and their agreement with the shipped Table B.

#include "repsq/golden.hpp"
#include "repsq/mordell.hpp"

#include <optional>
#include <vector>

namespace repsq {

struct ListedPoint {
  Integer x;
  std::optional<Natural> y;  // empty when x^3 + N is not a square
  bool within_scan = false;
  bool found_by_scan = false;
};

struct MordellReport {
  MordellInstance instance;
  std::uint64_t scan_bound = 0;
  int p_max = 0;
  std::vector<IntegerPoint> points;       // scan result
  std::vector<FormMatch> form_matches;
  std::vector<Integer> in_form_scan_points;

  // Populated only when the (family, r) pair has a Table B row.
  std::optional<golden::TableBRow> golden;
  bool n_matches = false;
  std::vector<ListedPoint> listed;
  std::vector<Integer> unlisted_found;    // scan points Table B does not list
  bool bold_matches = false;              // form_search x-set == bold set
  bool no_in_form_extras = false;         // every in-form scan point is bold

  /// All checks pass; false when there is no Table B row to compare against.
  bool table_b_agreement() const;
};

MordellReport mordell_report(const CaseFamily& family, int r, std::uint64_t scan_bound,
                             int p_max, const ScanOptions& options = {});

struct TableBReport {
  std::vector<MordellReport> rows;  // Table B order
  bool all_agree() const;
};

/// Runs every Table B row: N, listed points on the curve, scan coverage up to
/// the bound, and form matches against the bold entries.
TableBReport reproduce_table_b(std::uint64_t x_scan_bound, int p_max = 30,
                               const ScanOptions& options = {});

}  // namespace repsq
