#pragma once
// Reference tables shipped with the library (core/data/*.json, embedded at
// build time). The CLI compares against these to catch arithmetic regressions.

#include "repsq/arith.hpp"
#include "repsq/sieve.hpp"

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace repsq::golden {

struct TableARows {
  std::vector<int> exponents;
  std::map<int, std::string> rows;  // keyed by a+b, e.g. 4 -> "OOXXX"
};

struct TableBRow {
  CaseFamily family;
  int r = 0;
  std::string x_form;
  std::string y_form;
  Natural N;
  std::vector<Integer> x_coords;
  std::vector<Integer> bold;
};

struct SolutionRow {
  int a = 0, m = 0, b = 0, n = 0;
  Natural square;
  Natural root;
};

const TableARows& table_a();
const std::vector<TableBRow>& table_b();
const std::vector<SolutionRow>& known_solutions();

/// Looks up the Table B row for (family, r); nullptr if there is none.
const TableBRow* find_table_b(const CaseFamily& family, int r);

std::string_view raw(std::string_view name);  // "table_a", "table_b", "known_solutions"

}  // namespace repsq::golden
