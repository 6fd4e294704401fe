#include "morita/random.hpp"

#include <algorithm>

#include "morita/error.hpp"
#include "morita/linalg.hpp"

namespace morita {

Rational random_integer(Rng& rng, int lo, int hi) {
  std::uniform_int_distribution<int> dist(lo, hi);
  return Rational(dist(rng));
}

UniPoly random_unipoly(Rng& rng, std::size_t max_degree, int bound) {
  std::vector<Rational> coeffs(max_degree + 1);
  for (auto& c : coeffs) c = random_integer(rng, -bound, bound);
  return UniPoly(std::move(coeffs));
}

RatFun random_ratfun(Rng& rng, std::size_t max_degree, int bound) {
  while (true) {
    UniPoly num = random_unipoly(rng, max_degree, bound);
    UniPoly den = random_unipoly(rng, max_degree, bound).monic();
    if (den.is_zero()) den = UniPoly(1);
    RatFun f(num, den);
    if (!derivative(f).is_zero()) return f;
  }
}

QMatrix random_qmatrix(Rng& rng, Index rows, Index cols, int bound) {
  QMatrix m(rows, cols);
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j) m(i, j) = random_integer(rng, -bound, bound);
  return m;
}

QMatrix random_invertible(Rng& rng, Index n, int bound) {
  while (true) {
    QMatrix m = random_qmatrix(rng, n, n, bound);
    if (!determinant(m).is_zero()) return m;
  }
}

RatMatrix random_poly_matrix(Rng& rng, Index n, std::size_t max_degree,
                             int bound) {
  RatMatrix m(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      m(i, j) = RatFun(random_unipoly(rng, max_degree, bound));
  return m;
}

HomoPoly random_homo_poly(Rng& rng, std::size_t degree, int bound) {
  std::vector<Rational> coeffs(degree + 1);
  for (auto& c : coeffs) c = random_integer(rng, -bound, bound);
  return HomoPoly(degree, std::move(coeffs));
}

namespace {

std::size_t random_degree(Rng& rng, std::size_t max_degree) {
  std::uniform_int_distribution<std::size_t> dist(0, max_degree);
  return dist(rng);
}

}  // namespace

HomogeneousCurve random_curve(Rng& rng, Index d, std::size_t max_degree,
                              int bound) {
  while (true) {
    HomoMatrix m(2 * d, d);
    for (Index j = 0; j < d; ++j) {
      const std::size_t degree = random_degree(rng, max_degree);
      for (Index i = 0; i < 2 * d; ++i) m(i, j) = random_homo_poly(rng, degree, bound);
    }
    try {
      return HomogeneousCurve(std::move(m));
    } catch (const MathError&) {
    }
  }
}

HomogeneousCurve random_mixed_curve(Rng& rng, Index d, std::size_t max_degree,
                                    int bound) {
  while (true) {
    std::vector<std::size_t> basis_degrees(d), column_degrees(d);
    for (auto& a : basis_degrees) a = random_degree(rng, max_degree / 2);
    const std::size_t top =
        *std::max_element(basis_degrees.begin(), basis_degrees.end());
    for (auto& e : column_degrees) {
      std::uniform_int_distribution<std::size_t> dist(top, max_degree);
      e = dist(rng);
    }
    HomoMatrix basis(2 * d, d);
    for (Index j = 0; j < d; ++j)
      for (Index i = 0; i < 2 * d; ++i)
        basis(i, j) = random_homo_poly(rng, basis_degrees[j], bound);
    HomoMatrix mixing(d, d);
    for (Index i = 0; i < d; ++i)
      for (Index j = 0; j < d; ++j)
        mixing(i, j) = random_homo_poly(rng, column_degrees[j] - basis_degrees[i], 2);
    try {
      return HomogeneousCurve(basis * mixing);
    } catch (const MathError&) {
    }
  }
}

}  // namespace morita
