#include "morita/splitting.hpp"

#include <algorithm>
#include <map>

#include "morita/error.hpp"
#include "morita/linalg.hpp"
#include "morita/pluecker.hpp"

namespace morita {

SplittingType make_splitting(std::vector<std::size_t> exponents) {
  std::sort(exponents.begin(), exponents.end());
  const std::size_t width =
      exponents.empty() ? 0 : exponents.back() - exponents.front();
  return {std::move(exponents), width};
}

namespace {

// Linear conditions on the coefficients of a degree-m vector v for
// v(s:t) to lie in the column span of c. With a row set J whose minor P_J
// is nonzero, v is in the span iff the (d+1)-minors on J + {r} vanish for
// every r outside J (Schur complement of the invertible J block). Each such
// minor, expanded along v, is sum_i +-v_i P_{J+r-i}.
QMatrix membership_system(const PlueckerVector& pv, std::size_t m) {
  const int d = int(pv.d);
  const auto subs = subsets(2 * d, d);
  std::map<std::vector<int>, std::size_t> index;
  for (std::size_t i = 0; i < subs.size(); ++i) index[subs[i]] = i;

  std::vector<int> anchor(d);
  for (int i = 0; i < d; ++i) anchor[i] = d + i;
  if (pv.coords[index.at(anchor)].is_zero()) {
    for (std::size_t i = 0; i < subs.size(); ++i)
      if (!pv.coords[i].is_zero()) {
        anchor = subs[i];
        break;
      }
  }

  const std::size_t deg = pv.degree;
  const Index width = Index(m + 1);
  QMatrix system = QMatrix::Zero(Index(d) * Index(m + deg + 1), 2 * d * width);
  Index row_base = 0;
  for (int r = 0; r < 2 * d; ++r) {
    if (std::find(anchor.begin(), anchor.end(), r) != anchor.end()) continue;
    std::vector<int> rows = anchor;
    rows.push_back(r);
    std::sort(rows.begin(), rows.end());
    for (int pos = 0; pos <= d; ++pos) {
      std::vector<int> rest = rows;
      rest.erase(rest.begin() + pos);
      const HomoPoly& minor = pv.coords[index.at(rest)];
      if (minor.is_zero()) continue;
      const int sign = (pos + d) % 2 == 0 ? 1 : -1;
      const int v_row = rows[pos];
      for (std::size_t k = 0; k <= m; ++k)
        for (std::size_t q = 0; q <= deg; ++q) {
          if (minor.coeff(q).is_zero()) continue;
          system(row_base + Index(k + q), v_row * width + Index(k)) +=
              sign * minor.coeff(q);
        }
    }
    row_base += Index(m + deg + 1);
  }
  return system;
}

QMatrix degree_space(const PlueckerVector& pv, std::size_t m) {
  const QMatrix kernel = nullspace(membership_system(pv, m));
  if (kernel.cols() == 0) return QMatrix(0, kernel.rows());
  auto echelon = rref(QMatrix(kernel.transpose()));
  return echelon.reduced.topRows(Index(echelon.pivots.size()));
}

// Row space kept in echelon form for incremental independence tests.
class Span {
 public:
  explicit Span(Index n) : n_(n) {}

  // Adds v if it is independent of the current rows.
  bool add(Vec<Rational> v) {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const Rational& c = v(pivots_[i]);
      if (!c.is_zero()) v -= c * rows_[i];
    }
    Index pivot = -1;
    for (Index j = 0; j < n_; ++j)
      if (!v(j).is_zero()) {
        pivot = j;
        break;
      }
    if (pivot < 0) return false;
    v /= Rational(v(pivot));
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const Rational c = rows_[i](pivot);
      if (!c.is_zero()) rows_[i] -= c * v;
    }
    rows_.push_back(std::move(v));
    pivots_.push_back(pivot);
    return true;
  }

 private:
  Index n_;
  std::vector<Vec<Rational>> rows_;
  std::vector<Index> pivots_;
};

struct BasisVector {
  std::size_t degree;
  Vec<Rational> coeffs;  // row-major over (row, k) with degree + 1 slots
};

// s^i t^j * v, re-laid out for degree m = v.degree + i + j.
Vec<Rational> shifted(const BasisVector& v, Index rows, std::size_t i,
                      std::size_t j) {
  const std::size_t m = v.degree + i + j;
  Vec<Rational> out = Vec<Rational>::Zero(rows * Index(m + 1));
  for (Index r = 0; r < rows; ++r)
    for (std::size_t k = 0; k <= v.degree; ++k)
      out(r * Index(m + 1) + Index(k + j)) = v.coeffs(r * Index(v.degree + 1) + Index(k));
  return out;
}

}  // namespace

QMatrix saturated_degree_space(const HomogeneousCurve& c, std::size_t m) {
  return degree_space(pluecker_vector(c), m);
}

MinimalBasis minimal_basis(const HomogeneousCurve& c) {
  const Index d = c.d();
  const PlueckerVector pv = pluecker_vector(c);
  const std::size_t cap = c.total_column_degree();
  std::vector<BasisVector> found;
  for (std::size_t m = 0; Index(found.size()) < d; ++m) {
    if (m > cap)
      throw MathError("minimal basis search exceeded the input degree bound");
    const QMatrix space = degree_space(pv, m);
    if (space.rows() == 0) continue;
    Span span(space.cols());
    for (const auto& b : found)
      for (std::size_t i = 0; i + b.degree <= m; ++i)
        span.add(shifted(b, 2 * d, i, m - b.degree - i));
    for (Index k = 0; k < space.rows() && Index(found.size()) < d; ++k) {
      Vec<Rational> candidate = space.row(k).transpose();
      if (span.add(candidate)) found.push_back({m, std::move(candidate)});
    }
  }

  HomoMatrix basis(2 * d, d);
  std::vector<std::size_t> exponents;
  for (Index j = 0; j < d; ++j) {
    const BasisVector& b = found[j];
    for (Index r = 0; r < 2 * d; ++r) {
      std::vector<Rational> coeffs(b.degree + 1);
      for (std::size_t k = 0; k <= b.degree; ++k)
        coeffs[k] = b.coeffs(r * Index(b.degree + 1) + Index(k));
      basis(r, j) = HomoPoly(b.degree, std::move(coeffs));
    }
    exponents.push_back(b.degree);
  }
  return {HomogeneousCurve(std::move(basis)), make_splitting(std::move(exponents))};
}

SplittingType splitting_type(const HomogeneousCurve& c) {
  return minimal_basis(c).splitting;
}

std::size_t width(const HomogeneousCurve& c) { return splitting_type(c).width; }

HomogeneousCurve saturate(const HomogeneousCurve& c) {
  return minimal_basis(c).basis;
}

}  // namespace morita
