#include <gtest/gtest.h>

#include "morita/error.hpp"
#include "morita/oracle.hpp"
#include "morita/random.hpp"
#include "morita/splitting.hpp"
#include "test_util.hpp"

using namespace morita;
using morita::testing::curve;

namespace {

HomogeneousCurve reparametrized(const HomogeneousCurve& c, const QMatrix& phi) {
  HomoMatrix m = c.matrix();
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j)
      m(i, j) = substitute(m(i, j), phi(0, 0), phi(0, 1), phi(1, 0), phi(1, 1));
  return HomogeneousCurve(std::move(m));
}

}  // namespace

TEST(Splitting, MakeSplittingSortsAndMeasuresWidth) {
  const SplittingType st = make_splitting({3, 1, 2});
  EXPECT_EQ(st.exponents, (std::vector<std::size_t>{1, 2, 3}));
  EXPECT_EQ(st.width, 2u);
}

TEST(Splitting, MoritaIsBalanced) {
  for (Index d = 1; d <= 4; ++d) {
    HomoMatrix m(2 * d, d);
    for (Index i = 0; i < 2 * d; ++i)
      for (Index j = 0; j < d; ++j) m(i, j) = HomoPoly::zero(1);
    for (Index j = 0; j < d; ++j) {
      m(j, j) = HomoPoly::s();
      m(d + j, j) = HomoPoly::t();
    }
    const SplittingType st = splitting_type(HomogeneousCurve(m));
    EXPECT_EQ(st.exponents, std::vector<std::size_t>(std::size_t(d), 1));
    EXPECT_EQ(st.width, 0u);
  }
}

TEST(Splitting, UnbalancedExample) {
  const SplittingType st = splitting_type(morita::testing::split_13_curve());
  EXPECT_EQ(st.exponents, (std::vector<std::size_t>{1, 3}));
  EXPECT_EQ(width(morita::testing::split_13_curve()), 2u);
}

TEST(Splitting, LinesInThePlane) {
  EXPECT_EQ(splitting_type(curve(1, {{"s^2", "t^2"}})).exponents,
            (std::vector<std::size_t>{2}));
  EXPECT_EQ(splitting_type(curve(1, {{"s^2*t", "t^3"}})).exponents,
            (std::vector<std::size_t>{2}));
  EXPECT_EQ(splitting_type(curve(1, {{"1", "2"}})).exponents,
            (std::vector<std::size_t>{0}));
}

TEST(Splitting, ConstantColumnsGiveZeroExponents) {
  const SplittingType st =
      splitting_type(curve(2, {{"1", "0", "0", "0"}, {"0", "s", "0", "t"}}));
  EXPECT_EQ(st.exponents, (std::vector<std::size_t>{0, 1}));
}

TEST(Splitting, MinimalBasisDegreesMatchExponents) {
  Rng rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const HomogeneousCurve c = random_mixed_curve(rng, 1 + trial % 3, 4, 3);
    const MinimalBasis mb = minimal_basis(c);
    std::vector<std::size_t> degrees = mb.basis.column_degrees();
    std::sort(degrees.begin(), degrees.end());
    EXPECT_EQ(degrees, mb.splitting.exponents);
  }
}

TEST(Splitting, InvariantUnderBothGroupActions) {
  Rng rng(99);
  for (int trial = 0; trial < 20; ++trial) {
    const Index d = 1 + trial % 3;
    const HomogeneousCurve c = random_mixed_curve(rng, d, 4, 3);
    const SplittingType st = splitting_type(c);
    const QMatrix g = random_invertible(rng, 2 * d, 3);
    const HomogeneousCurve moved(cast_matrix<HomoPoly>(g) * c.matrix());
    EXPECT_EQ(splitting_type(moved), st);
    EXPECT_EQ(splitting_type(reparametrized(c, random_invertible(rng, 2, 3))), st);
  }
}

TEST(Splitting, AgreesWithPointwiseOracle) {
  Rng rng(1234);
  for (int trial = 0; trial < 20; ++trial) {
    const HomogeneousCurve c = random_mixed_curve(rng, 1 + trial % 3, 5, 3);
    EXPECT_EQ(splitting_type(c), splitting_from_h0(h0_profile(c)));
  }
}

TEST(Splitting, DegreeSpaceDimensionsMatchOracle) {
  const HomogeneousCurve c = morita::testing::split_13_curve();
  const H0Sequence seq = h0_sequence(c, 4);
  for (std::size_t m = 0; m <= 4; ++m)
    EXPECT_EQ(saturated_degree_space(c, m).rows(), seq.dims[m]) << "m = " << m;
}

TEST(Splitting, ConstantSubspace) {
  const SplittingType st =
      splitting_type(curve(2, {{"1", "0", "0", "0"}, {"s", "0", "t", "0"}}));
  EXPECT_EQ(st.exponents, (std::vector<std::size_t>{0, 0}));
}
