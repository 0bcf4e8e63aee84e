#include "repsq/golden.hpp"

#include "golden_data.hpp"

#include <nlohmann/json.hpp>

#include <stdexcept>

namespace repsq::golden {
namespace {

using nlohmann::json;

TableARows parse_table_a() {
  const json j = json::parse(data::kTableA);
  TableARows t;
  t.exponents = j.at("exponents").get<std::vector<int>>();
  for (const auto& [key, value] : j.at("rows").items()) t.rows[-std::stoi(key)] = value.get<std::string>();
  return t;
}

std::vector<TableBRow> parse_table_b() {
  std::vector<TableBRow> out;
  for (const auto& row : json::parse(data::kTableB)) {
    TableBRow r;
    r.family = parse_family(row.at("family").get<std::string>());
    r.r = row.at("r").get<int>();
    r.x_form = row.at("x").get<std::string>();
    r.y_form = row.at("y").get<std::string>();
    r.N = from_string(row.at("N").get<std::string>());
    for (const auto& x : row.at("x_coords")) r.x_coords.emplace_back(x.get<std::int64_t>());
    for (const auto& x : row.at("bold")) r.bold.emplace_back(x.get<std::int64_t>());
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<SolutionRow> parse_known_solutions() {
  std::vector<SolutionRow> out;
  for (const auto& row : json::parse(data::kKnownSolutions)) {
    out.push_back({row.at("a").get<int>(), row.at("m").get<int>(), row.at("b").get<int>(),
                   row.at("n").get<int>(), from_string(row.at("square").get<std::string>()),
                   from_string(row.at("root").get<std::string>())});
  }
  return out;
}

}  // namespace

const TableARows& table_a() {
  static const TableARows t = parse_table_a();
  return t;
}

const std::vector<TableBRow>& table_b() {
  static const std::vector<TableBRow> t = parse_table_b();
  return t;
}

const std::vector<SolutionRow>& known_solutions() {
  static const std::vector<SolutionRow> t = parse_known_solutions();
  return t;
}

const TableBRow* find_table_b(const CaseFamily& family, int r) {
  for (const auto& row : table_b())
    if (row.family == family && row.r == r) return &row;
  return nullptr;
}

std::string_view raw(std::string_view name) {
  if (name == "table_a") return data::kTableA;
  if (name == "table_b") return data::kTableB;
  if (name == "known_solutions") return data::kKnownSolutions;
  throw std::invalid_argument("unknown golden table: " + std::string(name));
}

}  // namespace repsq::golden
