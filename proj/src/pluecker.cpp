#include "morita/pluecker.hpp"

#include "morita/error.hpp"
#include "morita/linalg.hpp"

namespace morita {

PlueckerVector pluecker_vector(const HomogeneousCurve& c) {
  std::vector<HomoPoly> minors = maximal_minors(c.matrix());
  HomoPoly content;
  for (const auto& m : minors)
    if (!m.is_zero()) content = content.is_zero() ? m : homo_gcd(content, m);
  // Generic rank d guarantees a nonzero minor.
  Rational scale;
  std::size_t degree = 0;
  for (auto& m : minors) {
    m = exact_div(m, content);
    if (scale.is_zero() && !m.is_zero()) {
      degree = m.degree();
      scale = 1 / m.coeff(t_multiplicity(m));
    }
  }
  for (auto& m : minors) {
    m *= scale;
    if (m.is_zero()) m = HomoPoly::zero(degree);
  }
  return {c.d(), std::move(minors), degree};
}

std::size_t pluecker_degree(const HomogeneousCurve& c) {
  return pluecker_vector(c).degree;
}

std::string pluecker_label(Index d, const std::vector<int>& rows) {
  std::string out;
  for (int r : rows) {
    if (!out.empty()) out += ",";
    out += std::to_string(r / d + 1) + std::to_string(r % d + 1);
  }
  return out;
}

bool proportional(const std::vector<HomoPoly>& a, const std::vector<HomoPoly>& b) {
  if (a.size() != b.size()) return false;
  // Find a reference coefficient to fix lambda, then compare everything.
  std::optional<Rational> lambda;
  for (std::size_t i = 0; i < a.size() && !lambda; ++i) {
    if (a[i].is_zero() != b[i].is_zero()) return false;
    if (a[i].is_zero()) continue;
    const std::size_t k = t_multiplicity(b[i]);
    if (k >= a[i].coefficients().size()) return false;
    lambda = a[i].coeff(k) / b[i].coeff(k);
  }
  if (!lambda) return true;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!(a[i] == *lambda * b[i])) return false;
  return true;
}

QMatrix compound_matrix(const QMatrix& g, Index d) {
  const auto subs = subsets(int(g.rows()), int(d));
  QMatrix out(Index(subs.size()), Index(subs.size()));
  for (std::size_t i = 0; i < subs.size(); ++i)
    for (std::size_t j = 0; j < subs.size(); ++j) {
      QMatrix block(d, d);
      for (Index r = 0; r < d; ++r)
        for (Index c = 0; c < d; ++c) block(r, c) = g(subs[i][r], subs[j][c]);
      out(Index(i), Index(j)) = determinant(block);
    }
  return out;
}

namespace {

// Coordinates in the order z_{11,12}, z_{11,21}, z_{11,22}, z_{12,21},
// z_{12,22}, z_{21,22}.
std::vector<HomoPoly> klein_coords(const HomogeneousCurve& c) {
  if (c.d() != 2) throw MathError("Klein quadric defined only for d=2");
  return pluecker_vector(c).coords;
}

}  // namespace

HomoPoly klein_quadric_residual(const HomogeneousCurve& c) {
  const auto z = klein_coords(c);
  return z[0] * z[5] - z[1] * z[4] + z[2] * z[3];
}

std::array<HomoPoly, 3> morita_plane_residuals(const HomogeneousCurve& c) {
  const auto z = klein_coords(c);
  return {z[1], z[4], z[2] + z[3]};
}

}  // namespace morita
