#pragma once

// Exact linear algebra over fields (Rational, RatFun) and division-free
// minor expansion over commutative rings (HomoPoly, UniPoly).

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "morita/eigen.hpp"
#include "morita/error.hpp"

namespace morita {

// Cheaper pivots keep intermediate rational functions small.
inline std::size_t pivot_cost(const Rational&) { return 0; }
inline std::size_t pivot_cost(const RatFun& f) {
  return f.num().coefficients().size() + f.den().coefficients().size();
}

template <typename T>
struct Echelon {
  Mat<T> reduced;             // reduced row echelon form
  std::vector<Index> pivots;  // pivot column of each nonzero row
};

template <typename T>
Echelon<T> rref(Mat<T> m) {
  std::vector<Index> pivots;
  Index row = 0;
  for (Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Index best = -1;
    for (Index i = row; i < m.rows(); ++i) {
      if (is_zero(m(i, col))) continue;
      if (best < 0 || pivot_cost(m(i, col)) < pivot_cost(m(best, col))) best = i;
    }
    if (best < 0) continue;
    if (best != row) m.row(best).swap(m.row(row));
    const T inv = T(1) / m(row, col);
    for (Index j = col; j < m.cols(); ++j)
      if (!is_zero(m(row, j))) m(row, j) = m(row, j) * inv;
    for (Index i = 0; i < m.rows(); ++i) {
      if (i == row || is_zero(m(i, col))) continue;
      const T factor = m(i, col);
      for (Index j = col; j < m.cols(); ++j)
        if (!is_zero(m(row, j))) m(i, j) = m(i, j) - factor * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(m), std::move(pivots)};
}

template <typename T>
Index rank(const Mat<T>& m) {
  return static_cast<Index>(rref(m).pivots.size());
}

// Columns form a basis of {v : m v = 0}; one basis vector per free column,
// with a 1 in that position.
template <typename T>
Mat<T> nullspace(const Mat<T>& m) {
  const auto [reduced, pivots] = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (Index p : pivots) is_pivot[p] = true;
  Mat<T> basis = Mat<T>::Zero(m.cols(), m.cols() - Index(pivots.size()));
  Index k = 0;
  for (Index free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    basis(free, k) = T(1);
    for (std::size_t r = 0; r < pivots.size(); ++r)
      if (!is_zero(reduced(Index(r), free)))
        basis(pivots[r], k) = -reduced(Index(r), free);
    ++k;
  }
  return basis;
}

// Gaussian elimination; zero for singular input.
template <typename T>
T determinant(Mat<T> m) {
  if (m.rows() != m.cols()) throw MathError("determinant of non-square matrix");
  T det(1);
  const Index n = m.rows();
  for (Index col = 0; col < n; ++col) {
    Index best = -1;
    for (Index i = col; i < n; ++i) {
      if (is_zero(m(i, col))) continue;
      if (best < 0 || pivot_cost(m(i, col)) < pivot_cost(m(best, col))) best = i;
    }
    if (best < 0) return T(0);
    if (best != col) {
      m.row(best).swap(m.row(col));
      det = -det;
    }
    det = det * m(col, col);
    const T inv = T(1) / m(col, col);
    for (Index i = col + 1; i < n; ++i) {
      if (is_zero(m(i, col))) continue;
      const T factor = m(i, col) * inv;
      for (Index j = col + 1; j < n; ++j)
        if (!is_zero(m(col, j))) m(i, j) = m(i, j) - factor * m(col, j);
    }
  }
  return det;
}

// X with a X = b, for square nonsingular a.
template <typename T>
std::optional<Mat<T>> try_solve(const Mat<T>& a, const Mat<T>& b) {
  if (a.rows() != a.cols() || b.rows() != a.rows())
    throw MathError("dimension mismatch in linear solve");
  const Index n = a.rows();
  Mat<T> augmented(n, n + b.cols());
  augmented << a, b;
  auto [reduced, pivots] = rref(std::move(augmented));
  if (Index(pivots.size()) < n || pivots[n - 1] != n - 1) return std::nullopt;
  return Mat<T>(reduced.rightCols(b.cols()));
}

template <typename T>
std::optional<Mat<T>> try_inverse(const Mat<T>& m) {
  return try_solve<T>(m, Mat<T>::Identity(m.rows(), m.cols()));
}

template <typename T>
Mat<T> inverse(const Mat<T>& m) {
  auto inv = try_inverse(m);
  if (!inv) throw MathError("singular matrix");
  return *std::move(inv);
}

// Exact inverse over Q(x).
inline RatMatrix ratmatrix_inverse(const RatMatrix& m) {
  auto inv = try_inverse(m);
  if (!inv) throw MathError("singular matrix function");
  return *std::move(inv);
}

// Sorted k-subsets of {0, ..., n-1} in lexicographic order.
std::vector<std::vector<int>> subsets(int n, int k);

// All maximal minors of a tall n x k matrix over a commutative ring: entry i
// is the determinant of the rows subsets(n, k)[i]. Division-free expansion
// along the last column, memoized over row subsets of the leading columns.
template <typename T>
std::vector<T> maximal_minors(const Mat<T>& m) {
  const int n = int(m.rows());
  const int k = int(m.cols());
  if (k > n) throw MathError("maximal minors need rows >= cols");
  std::unordered_map<std::uint32_t, T> level{{0u, T(1)}};
  for (int col = 0; col < k; ++col) {
    std::unordered_map<std::uint32_t, T> next;
    for (const auto& rows : subsets(n, col + 1)) {
      std::uint32_t mask = 0;
      for (int r : rows) mask |= 1u << r;
      T acc(0);
      for (int pos = 0; pos <= col; ++pos) {
        const int r = rows[pos];
        const T& entry = m(r, col);
        if (is_zero(entry)) continue;
        const T& sub = level.at(mask & ~(1u << r));
        if (is_zero(sub)) continue;
        if ((pos + col) % 2 == 0)
          acc = acc + entry * sub;
        else
          acc = acc - entry * sub;
      }
      next.emplace(mask, std::move(acc));
    }
    level = std::move(next);
  }
  std::vector<T> out;
  for (const auto& rows : subsets(n, k)) {
    std::uint32_t mask = 0;
    for (int r : rows) mask |= 1u << r;
    out.push_back(level.at(mask));
  }
  return out;
}

// Determinant over a commutative ring without division.
template <typename T>
T ring_determinant(const Mat<T>& m) {
  if (m.rows() != m.cols()) throw MathError("determinant of non-square matrix");
  if (m.rows() == 0) return T(1);
  return maximal_minors(m).front();
}

// adj(m) with adj(m) * m = det(m) I, by cofactors.
template <typename T>
Mat<T> ring_adjugate(const Mat<T>& m) {
  const Index n = m.rows();
  if (n != m.cols()) throw MathError("adjugate of non-square matrix");
  Mat<T> adj(n, n);
  if (n == 1) {
    adj(0, 0) = T(1);
    return adj;
  }
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      Mat<T> minor(n - 1, n - 1);
      for (Index r = 0, rr = 0; r < n; ++r) {
        if (r == j) continue;
        for (Index c = 0, cc = 0; c < n; ++c) {
          if (c == i) continue;
          minor(rr, cc++) = m(r, c);
        }
        ++rr;
      }
      const T cofactor = ring_determinant(minor);
      adj(i, j) = (i + j) % 2 == 0 ? cofactor : T(0) - cofactor;
    }
  return adj;
}

template <typename T>
Mat<T> derivative(const Mat<T>& m) {
  Mat<T> out(m.rows(), m.cols());
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) out(i, j) = derivative(m(i, j));
  return out;
}

// Entrywise evaluation of a rational matrix function; throws at a pole.
QMatrix evaluate(const RatMatrix& m, const Rational& x);
QMatrix evaluate(const Mat<UniPoly>& m, const Rational& x);

// Entrywise c(s, t) for a matrix of homogeneous polynomials.
QMatrix evaluate(const HomoMatrix& m, const Rational& s, const Rational& t);

}  // namespace morita
