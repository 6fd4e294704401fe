#include <gtest/gtest.h>

#include "morita/error.hpp"
#include "morita/linalg.hpp"
#include "morita/morita.hpp"
#include "morita/oracle.hpp"
#include "morita/random.hpp"
#include "morita/schwarzian.hpp"
#include "test_util.hpp"

using namespace morita;
using morita::testing::curve;
using morita::testing::ratmatrix;

namespace {

const RatFun x = RatFun::x();

ChartMap bottom_chart(const RatMatrix& y) {
  ChartMap cm;
  cm.d = y.rows();
  cm.y = y;
  return cm;
}

QMatrix q2(int a, int b, int c, int d) {
  QMatrix m(2, 2);
  m << a, b, c, d;
  return m;
}

// Random polynomial chart map with det y' not identically zero.
RatMatrix random_chart(Rng& rng, Index d) {
  while (true) {
    RatMatrix y = random_poly_matrix(rng, d, 2, 3);
    if (!determinant(derivative(y)).is_zero()) return y;
  }
}

}  // namespace

TEST(Sigma, VanishesOnLinearAndInverseMaps) {
  for (Index d = 1; d <= 3; ++d) {
    const RatMatrix id = RatMatrix::Identity(d, d);
    EXPECT_TRUE(is_zero_matrix(sigma_coefficient(RatFun(x) * id)));
    EXPECT_TRUE(is_zero_matrix(sigma_coefficient(x.inverse() * id)));
  }
}

TEST(Sigma, ScalarSquare) {
  EXPECT_EQ(sigma_coefficient(ratmatrix({{x * x}})),
            ratmatrix({{RatFun(make_rational(-3, 2)) / (x * x)}}));
}

TEST(Sigma, NilpotentPerturbations) {
  // x I + x^2 N = x (I - x N)^{-1} is a matrix Moebius map, x I + x^3 N is not.
  EXPECT_TRUE(is_zero_matrix(sigma_coefficient(ratmatrix({{x, x * x}, {0, x}}))));
  EXPECT_EQ(sigma_coefficient(ratmatrix({{x, x * x * x}, {0, x}})), ratmatrix({{0, 6}, {0, 0}}));
}

TEST(Sigma, SingularDerivativeRejected) {
  try {
    sigma_coefficient(ratmatrix({{x * x, x}, {0, 0}}));
    FAIL();
  } catch (const MathError& e) {
    EXPECT_STREQ(e.what(), "derivative identically singular — σ undefined");
  }
}

TEST(Sigma, MatchesClassicalSchwarzianForScalars) {
  Rng rng(50);
  for (int trial = 0; trial < 30; ++trial) {
    const RatFun f = random_ratfun(rng, 3, 4);
    EXPECT_EQ(sigma_coefficient(ratmatrix({{f}}))(0, 0), classical_schwarzian(f));
  }
}

TEST(Delta, Examples) {
  EXPECT_TRUE(delta_nonzero(morita_curve(2)));
  EXPECT_FALSE(delta_nonzero(morita::testing::delta_zero_curve()));
  try {
    delta_nonzero(morita::testing::split_13_curve());
    FAIL();
  } catch (const MathError& e) {
    EXPECT_STREQ(e.what(), "Δ criterion requires deg(f) = d");
  }
}

TEST(Delta, InvariantUnderActions) {
  Rng rng(6);
  for (int trial = 0; trial < 10; ++trial) {
    const GroupElement g(random_invertible(rng, 4, 5));
    const HomogeneousCurve c = moebius_apply(g, morita_curve(2));
    EXPECT_TRUE(delta_nonzero(c));
    const Moebius2 mu(random_integer(rng, 1, 3), 1, random_integer(rng, -2, 2), 2);
    EXPECT_TRUE(delta_nonzero(reparametrize(mu, c)));
    const HomogeneousCurve z = moebius_apply(g, morita::testing::delta_zero_curve());
    EXPECT_FALSE(delta_nonzero(z));
    EXPECT_FALSE(delta_nonzero(reparametrize(mu, z)));
  }
}

TEST(SigmaIsZero, GateAndExamples) {
  EXPECT_TRUE(sigma_is_zero(morita_curve(3)));
  Rng rng(7);
  const GroupElement g(random_invertible(rng, 6, 5));
  EXPECT_TRUE(sigma_is_zero(moebius_apply(g, morita_curve(3))));
  try {
    sigma_is_zero(curve(1, {{"s^2", "t^2"}}));
    FAIL();
  } catch (const MathError& e) {
    EXPECT_STREQ(e.what(), "sigma test requires deg(f) = d and nonzero delta");
  }
  EXPECT_THROW(sigma_is_zero(morita::testing::delta_zero_curve()), MathError);
}

TEST(GroupElement, Validation) {
  EXPECT_THROW(GroupElement(QMatrix::Zero(4, 4)), MathError);
  EXPECT_THROW(GroupElement(QMatrix::Identity(3, 3)), MathError);
  try {
    GroupElement(QMatrix::Identity(2, 2), QMatrix::Identity(2, 2),
                 QMatrix::Identity(2, 2), QMatrix::Identity(2, 2));
    FAIL();
  } catch (const MathError& e) {
    EXPECT_STREQ(e.what(), "not a group element");
  }
  const GroupElement g(q2(1, 2, 3, 4));
  EXPECT_EQ(g.b()(0, 0), 2);
  EXPECT_EQ(g.c()(0, 0), 3);
  EXPECT_EQ(g.assembled(), q2(1, 2, 3, 4));
  EXPECT_THROW(Moebius2(1, 2, 2, 4), MathError);
}

TEST(MoebiusApply, Examples) {
  const HomogeneousCurve m = morita_curve(2);
  EXPECT_EQ(moebius_apply(GroupElement::identity(2), m).matrix(), m.matrix());

  const QMatrix zero = QMatrix::Zero(2, 2), id = QMatrix::Identity(2, 2);
  const GroupElement swap(zero, id, id, zero);
  EXPECT_EQ(chart_map(moebius_apply(swap, m), Chart::Bottom).y,
            ratmatrix({{x.inverse(), 0}, {0, x.inverse()}}));

  const QMatrix b0 = q2(0, 1, 0, 0);
  const GroupElement shear(id, b0, zero, id);
  EXPECT_EQ(chart_map(moebius_apply(shear, m), Chart::Bottom).y, ratmatrix({{x, 1}, {0, x}}));
  EXPECT_EQ(moebius_apply(shear, RatMatrix(RatFun(x) * RatMatrix::Identity(2, 2))),
            ratmatrix({{x, 1}, {0, x}}));
}

TEST(Reparametrize, Examples) {
  const HomogeneousCurve m = morita_curve(2);
  EXPECT_EQ(reparametrize(Moebius2(1, 0, 0, 1), m).matrix(), m.matrix());
  const HomogeneousCurve swapped = reparametrize(Moebius2(0, 1, 1, 0), m);
  EXPECT_EQ(swapped.matrix(),
            curve(2, {{"t", "0", "s", "0"}, {"0", "t", "0", "s"}}).matrix());
  const HomogeneousCurve shifted = reparametrize(Moebius2(1, 1, 0, 1), curve(1, {{"s", "t"}}));
  EXPECT_EQ(shifted.matrix(), curve(1, {{"s + t", "t"}}).matrix());
  EXPECT_EQ(reparametrize(Moebius2(2, 1, 1, 1), ratmatrix({{x}})),
            ratmatrix({{(2 * x + 1) / (x + 1)}}));
}

TEST(Moebius2, Derivative) {
  const Moebius2 mu(2, 1, 1, 1);
  EXPECT_EQ(mu.derivative(), derivative(mu.as_function()));
}

TEST(TransformationLaw, IdentityAndRandom) {
  Rng rng(42);
  for (Index d = 1; d <= 3; ++d) {
    for (int trial = 0; trial < 5; ++trial) {
      const ChartMap cm = bottom_chart(random_chart(rng, d));
      EXPECT_TRUE(transformation_check(GroupElement::identity(d), cm));
      GroupElement g = GroupElement::identity(d);
      while (true) {
        g = GroupElement(random_invertible(rng, 2 * d, 3));
        const RatMatrix factor =
            cast_matrix<RatFun>(g.c()) * cm.y + cast_matrix<RatFun>(g.d_block());
        if (!determinant(factor).is_zero()) break;
      }
      EXPECT_TRUE(transformation_check(g, cm));
    }
  }
}

TEST(TransformationLaw, NilpotentPerturbations) {
  Rng rng(43);
  const QMatrix n0 = q2(0, 1, 0, 0);
  for (int trial = 0; trial < 5; ++trial) {
    const RatMatrix y = RatFun(x) * RatMatrix::Identity(2, 2) +
                        RatFun(x * x) * cast_matrix<RatFun>(QMatrix(n0));
    const GroupElement g(random_invertible(rng, 4, 3));
    const RatMatrix factor = cast_matrix<RatFun>(g.c()) * y + cast_matrix<RatFun>(g.d_block());
    if (determinant(factor).is_zero()) continue;
    EXPECT_TRUE(transformation_check(g, bottom_chart(y)));
  }
}

TEST(InvarianceLaw, RandomReparametrizations) {
  Rng rng(44);
  for (Index d = 1; d <= 3; ++d) {
    for (int trial = 0; trial < 5; ++trial) {
      const ChartMap cm = bottom_chart(random_chart(rng, d));
      const QMatrix m = random_invertible(rng, 2, 4);
      EXPECT_TRUE(invariance_check(Moebius2(m(0, 0), m(0, 1), m(1, 0), m(1, 1)), cm));
    }
  }
}
