#include "morita/oracle.hpp"

#include "morita/error.hpp"
#include "morita/linalg.hpp"

namespace morita {

namespace {

// Rational powers s^(m-k) t^k for k = 0..m.
std::vector<Rational> monomial_values(const ProjectivePoint& p, std::size_t m) {
  std::vector<Rational> out(m + 1);
  for (std::size_t k = 0; k <= m; ++k) {
    Rational v = 1;
    for (std::size_t i = 0; i < m - k; ++i) v *= p.s;
    for (std::size_t i = 0; i < k; ++i) v *= p.t;
    out[k] = v;
  }
  return out;
}

// Full-rank sample points with their left annihilators N(p), N(p) c(p) = 0.
std::vector<std::pair<ProjectivePoint, QMatrix>> annihilators(
    const HomogeneousCurve& c, std::size_t count) {
  std::vector<std::pair<ProjectivePoint, QMatrix>> out;
  // A curve has finitely many rank drops: at most sum(column degrees).
  const auto points = sample_points(count + c.total_column_degree());
  for (const auto& p : points) {
    if (out.size() == count) break;
    const QMatrix value = evaluate(c.matrix(), p.s, p.t);
    if (rank(value) < c.d()) continue;
    out.emplace_back(p, QMatrix(nullspace(QMatrix(value.transpose())).transpose()));
  }
  return out;
}

Index h0_dimension(const HomogeneousCurve& c, std::size_t m) {
  const Index d = c.d();
  const Index width = Index(m + 1);
  const auto checks = annihilators(c, m + c.total_column_degree() + 1);
  QMatrix system = QMatrix::Zero(Index(checks.size()) * d, 2 * d * width);
  Index row = 0;
  for (const auto& [p, ann] : checks) {
    const auto mono = monomial_values(p, m);
    for (Index i = 0; i < ann.rows(); ++i, ++row)
      for (Index r = 0; r < 2 * d; ++r) {
        if (ann(i, r).is_zero()) continue;
        for (std::size_t k = 0; k <= m; ++k)
          system(row, r * width + Index(k)) = ann(i, r) * mono[k];
      }
  }
  return 2 * d * width - rank(system);
}

}  // namespace

H0Sequence h0_sequence(const HomogeneousCurve& c, std::size_t m_max) {
  H0Sequence seq{c.d(), {}};
  for (std::size_t m = 0; m <= m_max; ++m) seq.dims.push_back(h0_dimension(c, m));
  return seq;
}

H0Sequence h0_profile(const HomogeneousCurve& c) {
  H0Sequence seq{c.d(), {}};
  const std::size_t cap = c.total_column_degree() + 1;
  for (std::size_t m = 0; m <= cap; ++m) {
    seq.dims.push_back(h0_dimension(c, m));
    const Index previous = m == 0 ? 0 : seq.dims[m - 1];
    if (seq.dims[m] - previous == c.d()) return seq;
  }
  throw MathError("h0 profile did not stabilize below the degree bound");
}

SplittingType splitting_from_h0(const H0Sequence& seq) {
  const auto fail = [] { throw MathError("not an h0 profile"); };
  std::vector<std::size_t> exponents;
  Index previous_dim = 0;
  Index previous_step = 0;
  for (std::size_t m = 0; m < seq.dims.size(); ++m) {
    // step(m) = #{a_i <= m}, so its increase counts exponents equal to m.
    const Index step = seq.dims[m] - previous_dim;
    if (step < previous_step || step > seq.d) fail();
    for (Index k = previous_step; k < step; ++k) exponents.push_back(m);
    previous_dim = seq.dims[m];
    previous_step = step;
  }
  if (Index(exponents.size()) != seq.d) fail();
  return make_splitting(std::move(exponents));
}

RatFun classical_schwarzian(const RatFun& f) {
  const RatFun f1 = derivative(f);
  if (f1.is_zero())
    throw MathError("classical Schwarzian of a constant function");
  const RatFun f2 = derivative(f1);
  const RatFun f3 = derivative(f2);
  const RatFun ratio = f2 / f1;
  return f3 / f1 - RatFun(make_rational(3, 2)) * ratio * ratio;
}

bool subspace_equal_at_samples(const HomogeneousCurve& a, const HomogeneousCurve& b,
                               const std::vector<ProjectivePoint>& points) {
  if (a.d() != b.d()) return false;
  for (const auto& p : points) {
    const QMatrix va = evaluate_subspace(a, p.s, p.t);
    const QMatrix vb = evaluate_subspace(b, p.s, p.t);
    QMatrix joint(va.rows(), va.cols() + vb.cols());
    joint << va, vb;
    const Index r = rank(joint);
    if (rank(va) != r || rank(vb) != r) return false;
  }
  return true;
}

}  // namespace morita
