#include "morita/morita.hpp"

#include <algorithm>
#include <stdexcept>

#include "morita/error.hpp"
#include "morita/linalg.hpp"
#include "morita/oracle.hpp"
#include "morita/pluecker.hpp"

namespace morita {

HomogeneousCurve morita_curve(Index d) {
  if (d < 1) throw MathError("the Morita curve needs d >= 1");
  HomoMatrix m(2 * d, d);
  for (Index i = 0; i < 2 * d; ++i)
    for (Index j = 0; j < d; ++j) m(i, j) = HomoPoly::zero(1);
  for (Index j = 0; j < d; ++j) {
    m(j, j) = HomoPoly::s();
    m(d + j, j) = HomoPoly::t();
  }
  return HomogeneousCurve(std::move(m));
}

std::string to_string(Reason reason) {
  switch (reason) {
    case Reason::Ok: return "OK";
    case Reason::DegreeMismatch: return "DEGREE_MISMATCH";
    case Reason::DeltaZero: return "DELTA_ZERO";
    case Reason::WidthExceeded: return "WIDTH_EXCEEDED";
    case Reason::SigmaNonzero: return "SIGMA_NONZERO";
  }
  return "UNKNOWN";
}

CurveReport analyze(const HomogeneousCurve& c) {
  CurveReport report;
  report.d = c.d();
  report.degree = pluecker_degree(c);
  report.splitting = splitting_type(c);
  if (report.degree != std::size_t(c.d())) return report;
  ChartMap cm = visible_chart(c);
  const MatrixFraction y = as_fraction(cm.y);
  report.delta_nonzero = !derivative_determinant(y).is_zero();
  if (*report.delta_nonzero) report.sigma_zero = is_zero_matrix(sigma_fraction(y).num);
  report.chart = std::move(cm);
  return report;
}

Reason hypothesis_gate(const CurveReport& report) {
  if (report.degree != std::size_t(report.d)) return Reason::DegreeMismatch;
  if (!report.delta_nonzero.value_or(false)) return Reason::DeltaZero;
  if (report.splitting.width > kWidthBound) return Reason::WidthExceeded;
  return Reason::Ok;
}

HypothesisCheck check_hypotheses(const HomogeneousCurve& c) {
  HypothesisCheck out;
  out.report = analyze(c);
  out.reason = hypothesis_gate(out.report);
  return out;
}

GroupElement recover_group_element(const ChartMap& cm, const Rational& x0) {
  const Index d = cm.d;
  for (Index i = 0; i < d; ++i)
    for (Index j = 0; j < d; ++j)
      if (!cm.y(i, j).defined_at(x0))
        throw MathError("base point outside the chart domain");
  // y = N / q, y' = P / q^2, y'' = (P' q - 2 q' P) / q^3.
  const MatrixFraction y = as_fraction(cm.y);
  const Mat<UniPoly> p = derivative(y.num) * y.den - y.num * derivative(y.den);
  const Rational q0 = y.den(x0);
  const QMatrix y0 = evaluate(y.num, x0) / q0;
  const QMatrix p0 = evaluate(p, x0);
  const QMatrix dy0 = p0 / (q0 * q0);
  const QMatrix ddy0 =
      (evaluate(derivative(p), x0) * q0 - p0 * (Rational(2) * derivative(y.den)(x0))) /
      (q0 * q0 * q0);
  const auto dy0_inv = try_inverse(dy0);
  if (!dy0_inv) throw MathError("pick another base point");

  const QMatrix z0 = Rational(make_rational(1, 2)) * (*dy0_inv * ddy0);
  const QMatrix id = QMatrix::Identity(d, d);
  const QMatrix a = dy0 - y0 * z0;
  const QMatrix b = y0 + y0 * z0 * x0 - dy0 * x0;
  const QMatrix c = -z0;
  const QMatrix dd = id + z0 * x0;

  // N (Cx + D) == (Ax + B) q
  const auto linear = [](const QMatrix& slope, const QMatrix& offset) {
    Mat<UniPoly> m(slope.rows(), slope.cols());
    for (Index i = 0; i < m.rows(); ++i)
      for (Index j = 0; j < m.cols(); ++j)
        m(i, j) = UniPoly(std::vector<Rational>{offset(i, j), slope(i, j)});
    return m;
  };
  if (y.num * linear(c, dd) != linear(a, b) * y.den)
    throw MathError("curve is not a matrix Möbius map");
  try {
    return GroupElement(a, b, c, dd);
  } catch (const MathError&) {
    throw MathError("curve is not a matrix Möbius map");
  }
}

GroupElement normalized(const GroupElement& g) {
  QMatrix m = g.assembled();
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) {
        const Rational scale = m(i, j);
        m /= scale;
        return GroupElement(m);
      }
  return g;
}

Reason final_reason(Reason gate, bool sigma_zero) {
  if (gate == Reason::DegreeMismatch || gate == Reason::DeltaZero) return gate;
  if (sigma_zero) return Reason::Ok;
  return gate == Reason::WidthExceeded ? Reason::WidthExceeded : Reason::SigmaNonzero;
}

namespace {

// 0, 1, -1, 2, -2, ...
Rational base_point(int k) {
  return Rational((k + 1) / 2 * (k % 2 == 1 ? 1 : -1));
}

// P with (P c) = [complementary rows; inverted rows], so that P c reads as
// [y; I] in the Bottom chart.
QMatrix chart_permutation(const ChartMap& cm) {
  const Index n = 2 * cm.d;
  std::vector<int> order;
  for (int r = 0; r < n; ++r)
    if (std::find(cm.inverted_rows.begin(), cm.inverted_rows.end(), r) ==
        cm.inverted_rows.end())
      order.push_back(r);
  order.insert(order.end(), cm.inverted_rows.begin(), cm.inverted_rows.end());
  QMatrix p = QMatrix::Zero(n, n);
  for (Index k = 0; k < n; ++k) p(k, order[k]) = 1;
  return p;
}

}  // namespace

MoritaVerdict decide_morita(const HomogeneousCurve& c) {
  MoritaVerdict verdict;
  HypothesisCheck check = check_hypotheses(c);
  verdict.report = std::move(check.report);
  const Reason gate = check.reason;
  if (gate == Reason::DegreeMismatch || gate == Reason::DeltaZero) {
    verdict.reason = gate;
    return verdict;
  }

  verdict.reason = final_reason(gate, *verdict.report.sigma_zero);
  if (verdict.reason == Reason::SigmaNonzero)
    verdict.notes.push_back(
        "sigma is nonzero on a curve with deg = d, delta != 0 and width <= 3; "
        "this contradicts the classification and indicates a bug");
  if (verdict.reason != Reason::Ok) return verdict;
  if (gate == Reason::WidthExceeded)
    verdict.notes.push_back("width exceeds 3: accepted because sigma vanishes, "
                            "outside the hypotheses of the classification");

  const ChartMap& cm = *verdict.report.chart;
  std::optional<GroupElement> local;
  for (int k = 0; !local; ++k) {
    if (k > 100000) throw std::logic_error("no usable base point found");
    const Rational x0 = base_point(k);
    if (cm.domain_denominator(x0).is_zero()) continue;
    try {
      local = recover_group_element(cm, x0);
      verdict.base_point = x0;
    } catch (const MathError& e) {
      if (std::string(e.what()) != "pick another base point" &&
          std::string(e.what()) != "base point outside the chart domain")
        throw;
    }
  }
  const QMatrix witness = chart_permutation(cm).transpose() * local->assembled();
  verdict.witness = normalized(GroupElement(witness));
  if (!verify_equivalence(*verdict.witness, c))
    throw std::logic_error("recovered witness failed verification");
  verdict.accepted = true;
  if (cm.chart != Chart::Bottom)
    verdict.notes.push_back("witness recovered in the " + to_string(cm.chart) +
                            " chart");
  return verdict;
}

bool verify_equivalence(const GroupElement& g, const HomogeneousCurve& c) {
  if (g.d() != c.d()) return false;
  const HomogeneousCurve moved = moebius_apply(g, morita_curve(c.d()));
  const HomogeneousCurve target = saturate(c);
  const std::size_t degree =
      std::max(moved.max_column_degree(), target.max_column_degree());
  if (!subspace_equal_at_samples(moved, target, sample_points(2 * degree + 1)))
    return false;
  return proportional(pluecker_vector(moved).coords, pluecker_vector(c).coords);
}

}  // namespace morita
