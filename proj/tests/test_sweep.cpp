#include <bicheb/bounds.hpp>
#include <bicheb/errors.hpp>
#include <bicheb/sweep.hpp>

#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

namespace bicheb {
namespace {

TEST(Range, Parse) {
  const Range single = Range::parse("0.75");
  EXPECT_EQ(single.count, 1);
  EXPECT_EQ(single.values(), std::vector<double>{0.75});
  const auto v = Range::parse("1:3:5").values();
  ASSERT_EQ(v.size(), 5u);
  EXPECT_DOUBLE_EQ(v[1], 1.5);
  EXPECT_EQ(v.back(), 3.0);
  EXPECT_EQ(Range::parse(" 0.6 : 0.7071067811865476 : 3 ").values().back(), 0.7071067811865476);
  EXPECT_THROW(Range::parse("1:2"), UsageError);
  EXPECT_THROW(Range::parse("1:2:0"), UsageError);
  EXPECT_THROW(Range::parse("abc"), UsageError);
  EXPECT_THROW(Range::parse("1:2:x"), UsageError);
}

TEST(Grid, TVariesFastest) {
  SweepSpec spec;
  spec.lambda = Range::parse("1:2:2");
  spec.t = Range::parse("0.6:0.8:3");
  const auto grid = make_grid(spec);
  ASSERT_EQ(grid.size(), 6u);
  EXPECT_EQ(grid[0], ClassParams(1, 1, 0, 0.6));
  EXPECT_EQ(grid[1].t(), 0.7);
  EXPECT_EQ(grid[3], ClassParams(2, 1, 0, 0.6));
}

TEST(Grid, InvalidPointThrows) {
  SweepSpec spec;
  spec.t = Range::parse("0.4:0.6:3");
  EXPECT_THROW(make_grid(spec), UsageError);
}

TEST(Row, MatchesBounds) {
  const ClassParams p(1, 1, 0, 0.6);
  const std::vector<double> etas{1.0, 3.0};
  const SweepRow row = make_row(p, etas, MVariant::kCorrected);
  EXPECT_EQ(row.a2_bound, bound_a2(p));
  EXPECT_EQ(row.a3_bound, bound_a3(p));
  ASSERT_EQ(row.fs_bounds.size(), 2u);
  EXPECT_EQ(row.fs_bounds[1], fekete_szego_bound(p, 3.0).bound);
  EXPECT_FALSE(row.singular);
}

TEST(Format, Numbers) {
  EXPECT_EQ(format_number(0.821583836257749), "0.821583836258");
  EXPECT_EQ(format_number(0.4), "0.4");
  EXPECT_EQ(format_number(INFINITY), "inf");
  EXPECT_EQ(format_number(-0.0), "0");
  EXPECT_EQ(round_to_printed(0.821583836257749), 0.821583836258);
}

TEST(Csv, HeaderAndSingularRow) {
  SweepSpec spec;
  spec.lambda = Range::single(2);
  spec.mu = Range::single(0);
  spec.t = Range::parse("0.6:0.7071067811865476:3");
  spec.etas = {0.0, 2.0};
  const auto grid = make_grid(spec);
  std::vector<SweepRow> rows;
  for (const auto& p : grid) rows.push_back(make_row(p, spec.etas, spec.variant));
  const std::string csv = to_csv(rows, spec.etas);
  std::istringstream in(csv);
  std::string header, line;
  std::getline(in, header);
  EXPECT_EQ(header, "lambda,mu,delta,t,xi,a2_bound,a3_bound,fs_bound@0,fs_bound@2,denom,singular_flag");
  std::vector<std::string> lines;
  while (std::getline(in, line)) lines.push_back(line);
  ASSERT_EQ(lines.size(), 3u);
  EXPECT_NE(lines[0].find(",false"), std::string::npos);
  EXPECT_NE(lines[2].find(",inf,"), std::string::npos);
  EXPECT_EQ(lines[2].substr(lines[2].size() - 5), ",true");
}

TEST(Json, RoundTripAtPrintedPrecision) {
  SweepSpec spec;
  spec.lambda = Range::parse("1:3:3");
  spec.delta = Range::parse("0:1:2");
  spec.t = Range::parse("0.55:0.95:4");
  spec.etas = {0.0, 1.0, 2.0};
  std::vector<SweepRow> rows;
  for (const auto& p : make_grid(spec)) rows.push_back(make_row(p, spec.etas, spec.variant));
  const auto back = rows_from_json(to_json(rows, spec.etas), spec.etas);
  ASSERT_EQ(back.size(), rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) EXPECT_EQ(back[i], round_to_printed(rows[i])) << i;
}

TEST(Json, UnboundedIsAString) {
  const std::vector<double> etas{2.0};
  const std::vector<SweepRow> rows{make_row(ClassParams(2, 1, 0, 0.75), etas, MVariant::kCorrected)};
  const std::string text = to_json(rows, etas);
  EXPECT_NE(text.find("\"unbounded\""), std::string::npos);
  const auto back = rows_from_json(text, etas);
  EXPECT_TRUE(back[0].a2_bound.is_unbounded());
  EXPECT_TRUE(back[0].singular);
}

TEST(NumberList, Parse) {
  EXPECT_EQ(parse_number_list("0, 1,2.5"), (std::vector<double>{0, 1, 2.5}));
  EXPECT_TRUE(parse_number_list("").empty());
  EXPECT_THROW(parse_number_list("1,,2"), UsageError);
}

}  // namespace
}  // namespace bicheb
