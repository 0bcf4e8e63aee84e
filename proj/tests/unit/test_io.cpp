#include "repsq/io.hpp"

#include <gtest/gtest.h>

TEST(Json, SolutionFields) {
  const auto sols = repsq::enumerate_solutions(5, 10).solutions;
  const auto j = repsq::io::to_json(sols.back());
  EXPECT_EQ(j.at("a"), 4);
  EXPECT_EQ(j.at("m"), 5);
  EXPECT_EQ(j.at("b"), 7);
  EXPECT_EQ(j.at("n"), 2);
  EXPECT_EQ(j.at("sum"), "44521");
  EXPECT_EQ(j.at("root"), "211");
}

TEST(Json, MordellRowUsesDecimalStrings) {
  const auto rep = repsq::mordell_report(repsq::CaseFamily{7, 9, 5}, 2, 30'000, 30);
  const auto j = repsq::io::to_json(rep);
  EXPECT_EQ(j.at("N"), "440992160000");
  EXPECT_EQ(j.at("x_form"), "7*10^(l+2)");
  EXPECT_TRUE(j.at("points").is_array());
  for (const auto& p : j.at("points")) {
    EXPECT_TRUE(p.at("x").is_string());
    EXPECT_TRUE(p.at("y").is_string());
  }
}

TEST(Json, SieveReportShape) {
  const auto j = repsq::io::to_json(repsq::sieve_family(repsq::CaseFamily{7, 9, 4}, 7));
  EXPECT_EQ(j.at("modulus"), 7);
  EXPECT_EQ(j.at("period"), 1);
  EXPECT_EQ(j.at("classes").size(), 1u);
  EXPECT_TRUE(j.at("eliminates_all").get<bool>());
}

TEST(Csv, SolutionsHaveHeaderAndRows) {
  const auto csv = repsq::io::solutions_csv(repsq::enumerate_solutions(5, 10).solutions, false);
  std::size_t lines = 0;
  for (char c : csv) lines += c == '\n';
  EXPECT_EQ(lines, 8u);
  EXPECT_NE(csv.find(",44521,211"), std::string::npos);
}

TEST(Render, TableAText) {
  const auto table = repsq::table_a();
  const auto text = repsq::io::render(table);
  std::size_t lines = 0;
  for (char c : text) lines += c == '\n';
  EXPECT_EQ(lines, 18u);
  EXPECT_NE(text.find("-16"), std::string::npos);
  EXPECT_EQ(table.render_rows()[14], "OOOOX");
}
