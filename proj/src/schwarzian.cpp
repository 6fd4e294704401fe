#include "morita/schwarzian.hpp"

#include "morita/error.hpp"
#include "morita/linalg.hpp"
#include "morita/pluecker.hpp"

namespace morita {

GroupElement::GroupElement(QMatrix a, QMatrix b, QMatrix c, QMatrix d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
  const Index n = a_.rows();
  for (const QMatrix* block : {&a_, &b_, &c_, &d_})
    if (block->rows() != n || block->cols() != n || n < 1)
      throw MathError("not a group element");
  if (determinant(assembled()).is_zero()) throw MathError("not a group element");
}

namespace {

GroupElement from_assembled(const QMatrix& m) {
  if (m.rows() != m.cols() || m.rows() % 2 != 0 || m.rows() == 0)
    throw MathError("not a group element");
  const Index d = m.rows() / 2;
  return GroupElement(m.topLeftCorner(d, d), m.topRightCorner(d, d),
                      m.bottomLeftCorner(d, d), m.bottomRightCorner(d, d));
}

}  // namespace

GroupElement::GroupElement(const QMatrix& assembled)
    : GroupElement(from_assembled(assembled)) {}

GroupElement GroupElement::identity(Index d) {
  return GroupElement(QMatrix::Identity(d, d), QMatrix::Zero(d, d),
                      QMatrix::Zero(d, d), QMatrix::Identity(d, d));
}

QMatrix GroupElement::assembled() const {
  const Index n = d();
  QMatrix m(2 * n, 2 * n);
  m << a_, b_, c_, d_;
  return m;
}

Moebius2::Moebius2(Rational alpha, Rational beta, Rational gamma, Rational delta)
    : alpha_(std::move(alpha)),
      beta_(std::move(beta)),
      gamma_(std::move(gamma)),
      delta_(std::move(delta)) {
  if ((alpha_ * delta_ - beta_ * gamma_).is_zero())
    throw MathError("singular Moebius transformation");
}

RatFun Moebius2::as_function() const {
  return compose_moebius(RatFun::x(), alpha_, beta_, gamma_, delta_);
}

RatFun Moebius2::derivative() const {
  const UniPoly denom(std::vector<Rational>{delta_, gamma_});
  return RatFun(UniPoly(alpha_ * delta_ - beta_ * gamma_), denom * denom);
}

MatrixFraction as_fraction(const RatMatrix& y) {
  UniPoly q(1);
  for (Index i = 0; i < y.rows(); ++i)
    for (Index j = 0; j < y.cols(); ++j)
      q = exact_div(q * y(i, j).den(), poly_gcd(q, y(i, j).den()));
  Mat<UniPoly> n(y.rows(), y.cols());
  for (Index i = 0; i < y.rows(); ++i)
    for (Index j = 0; j < y.cols(); ++j)
      n(i, j) = y(i, j).num() * exact_div(q, y(i, j).den());
  return {std::move(n), std::move(q)};
}

RatMatrix to_ratmatrix(const MatrixFraction& f) {
  RatMatrix out(f.num.rows(), f.num.cols());
  for (Index i = 0; i < out.rows(); ++i)
    for (Index j = 0; j < out.cols(); ++j) out(i, j) = RatFun(f.num(i, j), f.den);
  return out;
}

bool equal(const MatrixFraction& a, const MatrixFraction& b) {
  return a.num * b.den == b.num * a.den;
}

UniPoly derivative_determinant(const MatrixFraction& y) {
  return ring_determinant(Mat<UniPoly>(derivative(y.num) * y.den - y.num * derivative(y.den)));
}

MatrixFraction sigma_fraction(const MatrixFraction& y) {
  // y = N / q and y' = P / q^2 with P = N' q - N q'. With W = adj(P) P' and
  // delta = det P, w = W / delta - 2 (q' / q) I and
  // sigma = (q (W' delta - W delta' - W^2 / 2) + 2 q' delta W
  //          - 2 q'' delta^2 I) / (q delta^2).
  const Index d = y.num.rows();
  const UniPoly& q = y.den;
  const UniPoly q1 = derivative(q);
  const UniPoly q2 = derivative(q1);
  const Mat<UniPoly> p = derivative(y.num) * q - y.num * q1;
  const UniPoly delta = ring_determinant(p);
  if (delta.is_zero()) throw MathError("derivative identically singular — σ undefined");
  const Mat<UniPoly> w = ring_adjugate(p) * derivative(p);
  const UniPoly delta1 = derivative(delta);

  Mat<UniPoly> num = (derivative(w) * delta - w * delta1) * q -
                     Rational(make_rational(1, 2)) * (w * w) * q +
                     w * (Rational(2) * q1 * delta);
  const UniPoly diagonal = Rational(2) * q2 * delta * delta;
  for (Index i = 0; i < d; ++i) num(i, i) = num(i, i) - diagonal;
  return {std::move(num), q * delta * delta};
}

RatMatrix sigma_coefficient(const RatMatrix& y) {
  return to_ratmatrix(sigma_fraction(as_fraction(y)));
}

SchwarzianTensor sigma(const ChartMap& cm) {
  return {sigma_coefficient(cm.y), cm.chart, cm.inverted_rows};
}

bool delta_nonzero(const HomogeneousCurve& c) {
  if (pluecker_degree(c) != std::size_t(c.d()))
    throw MathError("Δ criterion requires deg(f) = d");
  return !derivative_determinant(as_fraction(visible_chart(c).y)).is_zero();
}

bool sigma_is_zero(const HomogeneousCurve& c) {
  if (pluecker_degree(c) != std::size_t(c.d()) || !delta_nonzero(c))
    throw MathError("sigma test requires deg(f) = d and nonzero delta");
  return is_zero_matrix(sigma_fraction(as_fraction(visible_chart(c).y)).num);
}

HomogeneousCurve moebius_apply(const GroupElement& g, const HomogeneousCurve& c) {
  if (g.d() != c.d()) throw MathError("group element and curve differ in d");
  return HomogeneousCurve(cast_matrix<HomoPoly>(g.assembled()) * c.matrix());
}

RatMatrix moebius_apply(const GroupElement& g, const RatMatrix& y) {
  const RatMatrix top = cast_matrix<RatFun>(g.a()) * y + cast_matrix<RatFun>(g.b());
  const RatMatrix bottom = cast_matrix<RatFun>(g.c()) * y + cast_matrix<RatFun>(g.d_block());
  // top * bottom^{-1} = (bottom^T \ top^T)^T
  const auto solved = try_solve(RatMatrix(bottom.transpose()), RatMatrix(top.transpose()));
  if (!solved) throw MathError("Cy + D is identically singular");
  return solved->transpose();
}

namespace {

Mat<UniPoly> poly_matrix(const QMatrix& m) { return cast_matrix<UniPoly>(m); }

// p((alpha x + beta) / (gamma x + delta)) * (gamma x + delta)^degree
UniPoly compose_homogenized(const UniPoly& p, const Moebius2& mu, std::size_t degree) {
  const UniPoly top(std::vector<Rational>{mu.beta(), mu.alpha()});
  const UniPoly bottom(std::vector<Rational>{mu.delta(), mu.gamma()});
  UniPoly out;
  const auto& c = p.coefficients();
  for (std::size_t k = 0; k < c.size(); ++k)
    if (!c[k].is_zero()) out = out + c[k] * pow(top, k) * pow(bottom, degree - k);
  return out;
}

}  // namespace

MatrixFraction moebius_apply(const GroupElement& g, const MatrixFraction& y) {
  // (A N + B q)(C N + D q)^{-1} = (A N + B q) adj(K) / det K, K = C N + D q.
  const Mat<UniPoly> top = poly_matrix(g.a()) * y.num + poly_matrix(g.b()) * y.den;
  const Mat<UniPoly> k = poly_matrix(g.c()) * y.num + poly_matrix(g.d_block()) * y.den;
  const UniPoly det = ring_determinant(k);
  if (det.is_zero()) throw MathError("Cy + D is identically singular");
  return {top * ring_adjugate(k), det};
}

MatrixFraction reparametrize(const Moebius2& mu, const MatrixFraction& y) {
  std::size_t degree = y.den.degree().value_or(0);
  for (Index i = 0; i < y.num.rows(); ++i)
    for (Index j = 0; j < y.num.cols(); ++j)
      degree = std::max(degree, y.num(i, j).degree().value_or(0));
  MatrixFraction out{Mat<UniPoly>(y.num.rows(), y.num.cols()),
                     compose_homogenized(y.den, mu, degree)};
  for (Index i = 0; i < y.num.rows(); ++i)
    for (Index j = 0; j < y.num.cols(); ++j)
      out.num(i, j) = compose_homogenized(y.num(i, j), mu, degree);
  return out;
}

HomogeneousCurve reparametrize(const Moebius2& mu, const HomogeneousCurve& c) {
  HomoMatrix m = c.matrix();
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j)
      m(i, j) = substitute(m(i, j), mu.alpha(), mu.beta(), mu.gamma(), mu.delta());
  return HomogeneousCurve(std::move(m));
}

RatMatrix reparametrize(const Moebius2& mu, const RatMatrix& y) {
  RatMatrix out(y.rows(), y.cols());
  for (Index i = 0; i < y.rows(); ++i)
    for (Index j = 0; j < y.cols(); ++j)
      out(i, j) = compose_moebius(y(i, j), mu.alpha(), mu.beta(), mu.gamma(), mu.delta());
  return out;
}

bool transformation_check(const GroupElement& g, const ChartMap& cm) {
  const MatrixFraction y = as_fraction(cm.y);
  const MatrixFraction lhs = sigma_fraction(moebius_apply(g, y));
  const MatrixFraction rhs = sigma_fraction(y);
  // Cy + D = K / q; compare lhs K == K rhs after clearing denominators.
  const Mat<UniPoly> k = poly_matrix(g.c()) * y.num + poly_matrix(g.d_block()) * y.den;
  return lhs.num * k * rhs.den == k * rhs.num * lhs.den;
}

bool invariance_check(const Moebius2& mu, const ChartMap& cm) {
  const MatrixFraction y = as_fraction(cm.y);
  const MatrixFraction lhs = sigma_fraction(reparametrize(mu, y));
  MatrixFraction rhs = reparametrize(mu, sigma_fraction(y));
  // mu'(x)^2 = det^2 / (gamma x + delta)^4
  const Rational det = mu.alpha() * mu.delta() - mu.beta() * mu.gamma();
  const UniPoly bottom(std::vector<Rational>{mu.delta(), mu.gamma()});
  rhs.num = rhs.num * UniPoly(det * det);
  rhs.den = rhs.den * pow(bottom, 4);
  return equal(lhs, rhs);
}

}  // namespace morita
