#include <gtest/gtest.h>

#include "morita/error.hpp"
#include "morita/homo_poly.hpp"
#include "morita/linalg.hpp"
#include "morita/random.hpp"
#include "morita/ratfun.hpp"

using namespace morita;

namespace {

UniPoly poly(std::vector<long> coeffs) {
  std::vector<Rational> out;
  for (long c : coeffs) out.push_back(Rational(c));
  return UniPoly(std::move(out));
}

const UniPoly x = UniPoly::x();

}  // namespace

TEST(Rational, LowestTerms) {
  const Rational q = make_rational(6, -4);
  EXPECT_EQ(to_string(q), "-3/2");
  EXPECT_EQ(to_string(Rational(0)), "0");
  EXPECT_EQ(parse_rational("-6/4"), q);
  EXPECT_THROW(parse_rational("1/0"), ParseError);
  EXPECT_THROW(parse_rational("1/"), ParseError);
}

TEST(UniPoly, ZeroHasNoDegree) {
  EXPECT_FALSE(UniPoly().degree().has_value());
  EXPECT_FALSE((x - x).degree().has_value());
  EXPECT_EQ(UniPoly(7).degree(), 0u);
}

TEST(UniPoly, GcdExamples) {
  EXPECT_EQ(poly_gcd(x * x - 1, x - 1), x - 1);
  const UniPoly p = poly({2, 0, 4});
  EXPECT_EQ(poly_gcd(p, UniPoly()), p.monic());
  EXPECT_EQ(poly_gcd(UniPoly(3), UniPoly(5)), UniPoly(1));
  EXPECT_EQ(poly_gcd(UniPoly(), UniPoly()), UniPoly());
}

TEST(UniPoly, Printing) {
  EXPECT_EQ(to_string(make_rational(3, 2) * x * x - x + 1), "3/2*x^2 - x + 1");
  EXPECT_EQ(to_string(-x), "-x");
  EXPECT_EQ(to_string(UniPoly()), "0");
}

TEST(UniPoly, GcdDividesBothOperands) {
  Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const UniPoly common = random_unipoly(rng, 2, 3);
    const UniPoly p = common * random_unipoly(rng, 4, 5);
    const UniPoly q = common * random_unipoly(rng, 3, 5);
    const UniPoly g = poly_gcd(p, q);
    if (p.is_zero() && q.is_zero()) continue;
    EXPECT_TRUE(divmod(p, g).second.is_zero());
    EXPECT_TRUE(divmod(q, g).second.is_zero());
    EXPECT_EQ(g.leading(), 1);
    if (!common.is_zero()) EXPECT_TRUE(divmod(g, common).second.is_zero());
  }
}

TEST(RatFun, ReduceExamples) {
  const RatFun f = ratfun_reduce(x * x - 1, 2 * x - 2);
  EXPECT_EQ(f.num(), make_rational(1, 2) * (x + 1));
  EXPECT_EQ(f.den(), UniPoly(1));

  const RatFun zero = ratfun_reduce(UniPoly(), x);
  EXPECT_TRUE(zero.num().is_zero());
  EXPECT_EQ(zero.den(), UniPoly(1));

  const RatFun id = ratfun_reduce(x, UniPoly(1));
  EXPECT_EQ(id.num(), x);
  EXPECT_EQ(id.den(), UniPoly(1));
}

TEST(RatFun, ZeroDenominatorThrows) {
  try {
    ratfun_reduce(x, UniPoly());
    FAIL();
  } catch (const MathError& e) {
    EXPECT_STREQ(e.what(), "division by zero rational function");
  }
}

TEST(RatFun, FieldAxiomsOnRandomSamples) {
  Rng rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const RatFun a = random_ratfun(rng, 3, 4);
    const RatFun b = random_ratfun(rng, 3, 4);
    const RatFun c = random_ratfun(rng, 2, 4);
    EXPECT_EQ((a / b) * (b / a), RatFun(1));
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a - a, RatFun(0));
  }
}

TEST(RatFun, DerivativeAgreesWithQuotientRule) {
  const RatFun f(x * x + 1, x - 2);
  // ((2x)(x-2) - (x^2+1)) / (x-2)^2 = (x^2 - 4x - 1)/(x-2)^2
  EXPECT_EQ(derivative(f), RatFun(x * x - 4 * x - 1, (x - 2) * (x - 2)));
}

TEST(RatFun, ComposeWithMoebius) {
  // (x^2) o (x + 1) and (1/x) o (1/x)
  EXPECT_EQ(compose_moebius(RatFun(x * x), 1, 1, 0, 1),
            RatFun((x + 1) * (x + 1)));
  EXPECT_EQ(compose_moebius(RatFun(UniPoly(1), x), 0, 1, 1, 0), RatFun(x));
}

TEST(HomoPoly, DehomogenizeRoundTrip) {
  const HomoPoly p(3, {make_rational(3, 2), 0, 0, Rational(-1)});
  EXPECT_EQ(to_string(p), "3/2*s^3 - t^3");
  EXPECT_EQ(homogenize(dehomogenize(p), 3), p);
  EXPECT_EQ(p(Rational(1), Rational(0)), make_rational(3, 2));
  EXPECT_EQ(p(Rational(2), Rational(1)), Rational(11));
}

TEST(HomoPoly, GcdAndExactDivision) {
  const HomoPoly s = HomoPoly::s();
  const HomoPoly t = HomoPoly::t();
  const HomoPoly a = s * t * t;
  const HomoPoly b = t * t * t;
  EXPECT_EQ(homo_gcd(a, b), t * t);
  EXPECT_EQ(exact_div(a, t * t), s);
  EXPECT_THROW(exact_div(s, t), MathError);
  EXPECT_THROW(s + s * t, MathError);
  EXPECT_EQ(HomoPoly(0) + s, s);
}

TEST(HomoPoly, Substitution) {
  const HomoPoly s = HomoPoly::s();
  const HomoPoly t = HomoPoly::t();
  // (s, t) -> (s + t, t)
  EXPECT_EQ(substitute(s, 1, 1, 0, 1), s + t);
  EXPECT_EQ(substitute(s * t, 0, 1, 1, 0), s * t);
}

TEST(RatMatrix, InverseExamples) {
  const RatMatrix id = RatMatrix::Identity(3, 3);
  EXPECT_EQ(ratmatrix_inverse(id), id);

  RatMatrix diag = RatMatrix::Zero(2, 2);
  diag(0, 0) = diag(1, 1) = RatFun::x();
  RatMatrix expected = RatMatrix::Zero(2, 2);
  expected(0, 0) = expected(1, 1) = RatFun::x().inverse();
  EXPECT_EQ(ratmatrix_inverse(diag), expected);

  RatMatrix m(2, 2);
  m << RatFun::x(), RatFun(1), RatFun(0), RatFun(1);
  RatMatrix inv(2, 2);
  inv << RatFun::x().inverse(), -RatFun::x().inverse(), RatFun(0), RatFun(1);
  EXPECT_EQ(ratmatrix_inverse(m), inv);
}

TEST(RatMatrix, SingularThrows) {
  RatMatrix m(2, 2);
  m << RatFun::x(), RatFun(1), RatFun::x() * RatFun::x(), RatFun::x();
  try {
    ratmatrix_inverse(m);
    FAIL();
  } catch (const MathError& e) {
    EXPECT_STREQ(e.what(), "singular matrix function");
  }
}

TEST(RatMatrix, InverseIsTwoSided) {
  Rng rng(2024);
  int checked = 0;
  while (checked < 100) {
    const Index n = 1 + Index(checked % 3);
    const RatMatrix m = random_poly_matrix(rng, n, 1, 3);
    if (determinant(m).is_zero()) continue;
    const RatMatrix inv = ratmatrix_inverse(m);
    const RatMatrix id = RatMatrix::Identity(n, n);
    EXPECT_EQ(RatMatrix(inv * m), id);
    EXPECT_EQ(RatMatrix(m * inv), id);
    ++checked;
  }
}

TEST(Minors, MatchGaussianDeterminant) {
  Rng rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    const QMatrix m = random_qmatrix(rng, 4, 4, 5);
    EXPECT_EQ(ring_determinant(m), determinant(m));
  }
}

TEST(Minors, LexicographicSubsets) {
  const auto subs = subsets(4, 2);
  ASSERT_EQ(subs.size(), 6u);
  EXPECT_EQ(subs[0], (std::vector<int>{0, 1}));
  EXPECT_EQ(subs[2], (std::vector<int>{0, 3}));
  EXPECT_EQ(subs[5], (std::vector<int>{2, 3}));
}
