#include <gtest/gtest.h>

#include "morita/error.hpp"
#include "morita/linalg.hpp"
#include "morita/parser.hpp"
#include "morita/random.hpp"
#include "morita/splitting.hpp"
#include "test_util.hpp"

using namespace morita;
using morita::testing::curve;
using morita::testing::ratmatrix;

namespace {

const RatFun x = RatFun::x();

HomogeneousCurve morita2() {
  return curve(2, {{"s", "0", "t", "0"}, {"0", "s", "0", "t"}});
}

std::string error_of(const std::string& text) {
  try {
    parse_curve(text);
  } catch (const ParseError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST(Parser, PolynomialGrammar) {
  const BiPoly p = parse_bipoly("3/2*s^2*t - t^3");
  EXPECT_EQ(to_string(to_homo_poly(p, 3)), "3/2*s^2*t - t^3");
  EXPECT_EQ(to_string(to_homo_poly(parse_bipoly("2st - (s+t)^2"), 2)),
            "-s^2 - t^2");
  EXPECT_EQ(to_string(to_homo_poly(parse_bipoly("s/2"), 1)), "1/2*s");
  EXPECT_EQ(parse_ratfun("(x^2 - 1)/(2x - 2)"), RatFun(make_rational(1, 2)) * (x + 1));
  EXPECT_EQ(parse_ratfun("-1/x"), -x.inverse());
}

TEST(Parser, ErrorsCarryPosition) {
  try {
    parse_bipoly("s + * t");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 1u);
    EXPECT_EQ(e.column(), 5u);
  }
  EXPECT_THROW(parse_bipoly("s/t"), ParseError);
  EXPECT_THROW(parse_bipoly("x"), ParseError);
  EXPECT_THROW(parse_ratfun("1/(x - x)"), ParseError);
  EXPECT_THROW(parse_ratfun("(x"), ParseError);
}

TEST(ParseCurve, MoritaFile) {
  const HomogeneousCurve c = morita2();
  EXPECT_EQ(c.d(), 2);
  EXPECT_EQ(c.column_degrees(), (std::vector<std::size_t>{1, 1}));
  EXPECT_EQ(c.matrix()(0, 0), HomoPoly::s());
  EXPECT_EQ(c.matrix()(3, 1), HomoPoly::t());
}

TEST(ParseCurve, MixedDegreeColumnRejected) {
  const std::string msg = error_of(
      R"({"d": 2, "columns": [["s", "0", "t^2", "0"], ["0", "s", "0", "t"]]})");
  EXPECT_NE(msg.find("column 0 mixes degrees"), std::string::npos) << msg;
}

TEST(ParseCurve, RankDeficientRejected) {
  const std::string msg = error_of(
      R"({"d": 2, "columns": [["s", "0", "t", "0"], ["2s", "0", "2t", "0"]]})");
  EXPECT_NE(msg.find("degenerate curve matrix"), std::string::npos) << msg;
}

TEST(ParseCurve, MalformedJsonReportsLineAndColumn) {
  try {
    parse_curve("{\"d\": 2,\n \"columns\": [[\"s\" \"t\"]]}");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_GT(e.column(), 1u);
  }
}

TEST(ParseCurve, BadEntryNamesItsLocation) {
  const std::string msg = error_of(
      R"({"d": 1, "columns": [["s", "t +"]]})");
  EXPECT_NE(msg.find("column 0, row 1"), std::string::npos) << msg;
  EXPECT_NE(error_of(R"({"d": 1, "columns": [["s"]]})"), "");
  EXPECT_NE(error_of(R"({"d": 0, "columns": []})"), "");
  EXPECT_NE(error_of(R"({"d": 1})"), "");
  EXPECT_NE(error_of(R"({"d": 1, "columns": [["0", "0"]]})"), "");
}

TEST(ParseCurve, AffineFormHomogenizesColumns) {
  const HomogeneousCurve c = parse_curve(R"({"d": 2, "y": [["x^2", "x"], ["0", "0"]]})");
  EXPECT_EQ(c.column_degrees(), (std::vector<std::size_t>{2, 1}));
  EXPECT_EQ(chart_map(c, Chart::Bottom).y, ratmatrix({{x * x, x}, {0, 0}}));

  const HomogeneousCurve inv = parse_curve(R"({"d": 1, "y": [["1/x"]]})");
  EXPECT_EQ(inv.matrix()(0, 0), HomoPoly::t());
  EXPECT_EQ(inv.matrix()(1, 0), HomoPoly::s());
}

TEST(ParseCurve, JsonRoundTrip) {
  Rng rng(8);
  for (int trial = 0; trial < 20; ++trial) {
    const HomogeneousCurve c = random_curve(rng, 1 + trial % 3, 3, 4);
    const HomogeneousCurve back = parse_curve(to_curve_json(c));
    EXPECT_EQ(back.matrix(), c.matrix());
  }
}

TEST(ChartMap, MoritaCharts) {
  const ChartMap bottom = chart_map(morita2(), Chart::Bottom);
  EXPECT_EQ(bottom.y, ratmatrix({{x, 0}, {0, x}}));
  EXPECT_EQ(bottom.domain_denominator, UniPoly(1));
  const ChartMap top = chart_map(morita2(), Chart::Top);
  EXPECT_EQ(top.y, ratmatrix({{x.inverse(), 0}, {0, x.inverse()}}));
  EXPECT_EQ(top.domain_denominator, UniPoly::x() * UniPoly::x());
}

TEST(ChartMap, PolynomialExample) {
  const ChartMap cm = chart_map(morita::testing::delta_zero_curve(), Chart::Bottom);
  EXPECT_EQ(cm.y, ratmatrix({{x * x, x}, {0, 0}}));
}

TEST(ChartMap, MissingChartThrows) {
  const HomogeneousCurve c = curve(1, {{"s", "0"}});
  try {
    chart_map(c, Chart::Bottom);
    FAIL();
  } catch (const MathError& e) {
    EXPECT_STREQ(e.what(), "curve does not meet this chart");
  }
  EXPECT_EQ(chart_map(c, Chart::Top).y, ratmatrix({{0}}));
}

TEST(ChartMap, TopIsInverseOfBottom) {
  Rng rng(21);
  int checked = 0;
  while (checked < 30) {
    const HomogeneousCurve c = random_curve(rng, 1 + checked % 3, 2, 3);
    ChartMap bottom, top;
    try {
      bottom = chart_map(c, Chart::Bottom);
      top = chart_map(c, Chart::Top);
    } catch (const MathError&) {
      continue;
    }
    if (determinant(bottom.y).is_zero()) continue;
    EXPECT_EQ(top.y, ratmatrix_inverse(bottom.y));
    ++checked;
  }
}

TEST(EvaluateSubspace, Examples) {
  const QMatrix at_infinity = evaluate_subspace(morita2(), 1, 0);
  QMatrix expected = QMatrix::Zero(4, 2);
  expected(0, 0) = expected(1, 1) = 1;
  EXPECT_EQ(at_infinity, expected);

  const QMatrix at_two = evaluate_subspace(morita2(), 2, 1);
  expected = QMatrix::Zero(4, 2);
  expected(0, 0) = expected(1, 1) = 2;
  expected(2, 0) = expected(3, 1) = 1;
  EXPECT_EQ(at_two, expected);

  const QMatrix line = evaluate_subspace(curve(1, {{"s", "t"}}), 0, 1);
  EXPECT_EQ(line(0, 0), 0);
  EXPECT_EQ(line(1, 0), 1);

  try {
    evaluate_subspace(morita2(), 0, 0);
    FAIL();
  } catch (const MathError& e) {
    EXPECT_STREQ(e.what(), "not a point of the projective line");
  }
}

TEST(Saturate, RemovesCommonFactor) {
  const HomogeneousCurve c = saturate(curve(1, {{"s*t", "t^2"}}));
  EXPECT_EQ(c.column_degrees(), (std::vector<std::size_t>{1}));
  EXPECT_EQ(c.matrix()(0, 0), HomoPoly::s());
  EXPECT_EQ(c.matrix()(1, 0), HomoPoly::t());
}

TEST(Saturate, MoritaIsAlreadyMinimal) {
  EXPECT_EQ(saturate(morita2()).matrix(), morita2().matrix());
}

TEST(Saturate, SplitExampleBasis) {
  const HomogeneousCurve c = saturate(morita::testing::split_13_curve());
  EXPECT_EQ(c.column_degrees(), (std::vector<std::size_t>{1, 3}));
  EXPECT_EQ(c.matrix(), curve(2, {{"0", "s", "0", "t"}, {"s^3", "0", "t^3", "0"}}).matrix());
}

TEST(Saturate, IdempotentAndFullRankEverywhere) {
  Rng rng(77);
  for (int trial = 0; trial < 25; ++trial) {
    const Index d = 1 + trial % 3;
    const HomogeneousCurve c = random_mixed_curve(rng, d, 4, 3);
    const HomogeneousCurve once = saturate(c);
    const HomogeneousCurve twice = saturate(once);
    EXPECT_EQ(once.column_degrees(), twice.column_degrees());
    for (const auto& p : sample_points(2 * once.max_column_degree() + 3)) {
      const QMatrix a = evaluate_subspace(once, p.s, p.t);
      const QMatrix b = evaluate_subspace(twice, p.s, p.t);
      EXPECT_EQ(rank(a), d);
      QMatrix joint(2 * d, 2 * d);
      joint << a, b;
      EXPECT_EQ(rank(joint), d);
    }
  }
}
