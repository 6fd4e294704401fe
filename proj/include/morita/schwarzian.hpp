#pragma once

// The matrix Schwarzian sigma(f) = w' - w^2 / 2 with w = (y')^{-1} y'', the
// delta test, and the GL(2d) and GL(2) actions on curves and chart maps.

#include <vector>

#include "morita/curve.hpp"

namespace morita {

// sigma(f) = coefficient(x) dx^2 in the chart recorded alongside it.
struct SchwarzianTensor {
  RatMatrix coefficient;
  Chart chart = Chart::Bottom;
  std::vector<int> inverted_rows;
};

// (A B; C D) acting on chart maps by y -> (Ay + B)(Cy + D)^{-1}.
class GroupElement {
 public:
  // Throws MathError("not a group element") unless the blocks are d x d and
  // the assembled matrix is invertible.
  GroupElement(QMatrix a, QMatrix b, QMatrix c, QMatrix d);
  explicit GroupElement(const QMatrix& assembled);

  static GroupElement identity(Index d);

  Index d() const { return a_.rows(); }
  const QMatrix& a() const { return a_; }
  const QMatrix& b() const { return b_; }
  const QMatrix& c() const { return c_; }
  const QMatrix& d_block() const { return d_; }
  QMatrix assembled() const;

  friend bool operator==(const GroupElement&, const GroupElement&) = default;

 private:
  QMatrix a_, b_, c_, d_;
};

// x -> (alpha x + beta) / (gamma x + delta), i.e. (s, t) -> (alpha s + beta t,
// gamma s + delta t).
class Moebius2 {
 public:
  // Throws MathError("singular Moebius transformation").
  Moebius2(Rational alpha, Rational beta, Rational gamma, Rational delta);

  const Rational& alpha() const { return alpha_; }
  const Rational& beta() const { return beta_; }
  const Rational& gamma() const { return gamma_; }
  const Rational& delta() const { return delta_; }

  RatFun as_function() const;
  // (alpha delta - beta gamma) / (gamma x + delta)^2
  RatFun derivative() const;

 private:
  Rational alpha_, beta_, gamma_, delta_;
};

// num / den with a scalar polynomial denominator, not reduced. The law checks
// compare these by cross-multiplication and never take a gcd.
struct MatrixFraction {
  Mat<UniPoly> num;
  UniPoly den;
};

MatrixFraction as_fraction(const RatMatrix& y);
RatMatrix to_ratmatrix(const MatrixFraction& f);

// a == b as matrix functions.
bool equal(const MatrixFraction& a, const MatrixFraction& b);

// det(N' q - N q') = q^(2d) det y' for y = N / q.
UniPoly derivative_determinant(const MatrixFraction& y);

// Throws MathError("derivative identically singular — σ undefined").
MatrixFraction sigma_fraction(const MatrixFraction& y);
RatMatrix sigma_coefficient(const RatMatrix& y);

SchwarzianTensor sigma(const ChartMap& cm);

// True iff det y' is not identically zero in the visible chart.
// Throws MathError("Δ criterion requires deg(f) = d").
bool delta_nonzero(const HomogeneousCurve& c);

// Throws MathError("sigma test requires deg(f) = d and nonzero delta").
bool sigma_is_zero(const HomogeneousCurve& c);

// assembled(g) * c.
HomogeneousCurve moebius_apply(const GroupElement& g, const HomogeneousCurve& c);

// (Ay + B)(Cy + D)^{-1}. Throws MathError when Cy + D is singular.
RatMatrix moebius_apply(const GroupElement& g, const RatMatrix& y);

MatrixFraction moebius_apply(const GroupElement& g, const MatrixFraction& y);

HomogeneousCurve reparametrize(const Moebius2& mu, const HomogeneousCurve& c);

// y o mu.
RatMatrix reparametrize(const Moebius2& mu, const RatMatrix& y);
MatrixFraction reparametrize(const Moebius2& mu, const MatrixFraction& y);

// sigma(g.y) == (Cy + D) sigma(y) (Cy + D)^{-1}, with cm.y read as the
// Bottom-chart coordinate of g's block decomposition.
bool transformation_check(const GroupElement& g, const ChartMap& cm);

// sigma(y o mu)(x) == mu'(x)^2 sigma(y)(mu(x)).
bool invariance_check(const Moebius2& mu, const ChartMap& cm);

}  // namespace morita
