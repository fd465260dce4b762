#include <gtest/gtest.h>

#include <set>
#include <sstream>

#include "bismash.hpp"
#include "bismash/io.hpp"

using namespace bismash;

TEST(OrbitTableCsv, J5RowsAsSet) {
  const auto f = standard_factorization(Variant::J, 5);
  const auto& mp = f.pair();
  std::vector<index_type> xs;
  for (const char* x : {"()", "(1 4)(2 3)", "(1 2 4 3)", "(1 3 4 2)", "(1 2)", "(1 3)", "(1 2 3)", "(1 2 4)"})
    xs.push_back(mp.G().index_of(parse_cycles(x, 5)));
  const auto csv = io::to_csv(io::orbit_table(mp, xs));
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "x,(),(1 2 3 4 5),(1 3 5 2 4),(1 4 2 5 3),(1 5 4 3 2),stabilizer_order");
  std::set<std::string> rows;
  while (std::getline(in, line)) rows.insert(line);
  const std::set<std::string> expected = {
      "(),(),(),(),(),(),5",
      "(1 4)(2 3),(1 4)(2 3),(1 4)(2 3),(1 4)(2 3),(1 4)(2 3),(1 4)(2 3),5",
      "(1 2 4 3),(1 2 4 3),(1 2 4 3),(1 2 4 3),(1 2 4 3),(1 2 4 3),5",
      "(1 3 4 2),(1 3 4 2),(1 3 4 2),(1 3 4 2),(1 3 4 2),(1 3 4 2),5",
      "(1 2),(1 2),(1 4 3 2),(1 2 3 4),(3 4),(2 3),1",
      "(1 3),(1 3),(1 4 2 3),(1 4),(1 3 2 4),(2 4),1",
      "(1 2 3),(1 2 3),(2 4 3),(1 3 2),(1 3)(2 4),(2 3 4),1",
      "(1 2 4),(1 2 4),(1 2)(3 4),(1 4 3),(1 3 4),(1 4 2),1",
  };
  EXPECT_EQ(rows, expected);
}

TEST(OrbitTableJson, DefaultRowsAreRepresentatives) {
  const auto f = standard_factorization(Variant::J, 5);
  const auto j = io::to_json(io::orbit_table(f.pair()));
  EXPECT_EQ(j["rows"].size(), 8u);
  EXPECT_EQ(j["columns"].size(), 5u);
  for (const auto& row : j["rows"]) EXPECT_EQ(row["images"].size(), 5u);
}

TEST(AlgebraJson, IntegralTerms) {
  const auto f = standard_factorization(Variant::J, 5);
  const BismashProduct H(f.shared_pair());
  const auto j = io::to_json(f.pair(), H.integral());
  ASSERT_EQ(j.size(), 5u);
  for (const auto& t : j) {
    EXPECT_EQ(t["x"], "()");
    EXPECT_EQ(t["coeff"], "1/5");
  }
}

TEST(CharacterTableJson, S3) {
  const auto j = io::character_table_json(symmetric_group(3));
  EXPECT_EQ(j["classes"], (nlohmann::json{"()", "(2 3)", "(1 2 3)"}));
  ASSERT_EQ(j["rows"].size(), 3u);
  EXPECT_EQ(j["rows"][0]["irrep"], "S3:(3)");
  EXPECT_EQ(j["rows"][1]["values"], (nlohmann::json{"2", "0", "-1"}));
}

TEST(ReportJson, Schema) {
  const auto f = standard_factorization(Variant::H, 5);
  const auto rep = indicator_report(f);
  const auto j = io::to_json(f, {5, "H"}, rep);
  EXPECT_EQ(j["factorization"]["n"], 5);
  EXPECT_EQ(j["factorization"]["variant"], "H");
  EXPECT_EQ(j["trace_alpha"], 26);
  EXPECT_EQ(j["sum_nu_dim"], 26);
  EXPECT_TRUE(j["m0"].is_null());
  EXPECT_TRUE(j["m1"].is_null());
  ASSERT_EQ(j["simples"].size(), 8u);
  for (const auto& s : j["simples"]) {
    for (const char* key : {"orbit_rep", "stabilizer_order", "irrep", "dimension", "indicator"})
      EXPECT_TRUE(s.contains(key)) << key;
    EXPECT_EQ(s["indicator"], 1);
  }
}

TEST(ReportCsv, OneRowPerSimple) {
  const auto f = standard_factorization(Variant::J, 5);
  const auto csv = io::to_csv(f, indicator_report(f));
  EXPECT_EQ(static_cast<std::size_t>(std::count(csv.begin(), csv.end(), '\n')), 25u);
  EXPECT_NE(csv.find("(1 4)(2 3),1,5,C5:j=3,1,1"), std::string::npos);
}

TEST(Io, Helpers) {
  EXPECT_EQ(io::csv_field("a,b"), "\"a,b\"");
  EXPECT_EQ(io::csv_field("x\"y"), "\"x\"\"y\"");
  EXPECT_EQ(io::csv_field("(1 2)"), "(1 2)");
  EXPECT_EQ(io::decimal(Rational(35816, 3630000), 3), "0.00987");
  EXPECT_EQ(io::one_line(parse_cycles("(1 2 3)", 3)), (nlohmann::json{2, 3, 1}));
}
