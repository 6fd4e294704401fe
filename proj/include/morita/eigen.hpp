#pragma once

#include <Eigen/Core>
#include <boost/multiprecision/eigen.hpp>

#include "morita/homo_poly.hpp"
#include "morita/poly.hpp"
#include "morita/ratfun.hpp"
#include "morita/rational.hpp"

namespace morita::detail {

// Exact, non-ordered scalar: no epsilon, no vectorization.
template <typename T>
struct ExactNumTraits : Eigen::GenericNumTraits<T> {
  using Real = T;
  using NonInteger = T;
  using Literal = T;
  using Nested = T;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 20,
    MulCost = 40
  };
  static int digits10() { return 0; }
};

}  // namespace morita::detail

namespace Eigen {

template <>
struct NumTraits<morita::UniPoly> : morita::detail::ExactNumTraits<morita::UniPoly> {};
template <>
struct NumTraits<morita::HomoPoly> : morita::detail::ExactNumTraits<morita::HomoPoly> {};
template <>
struct NumTraits<morita::RatFun> : morita::detail::ExactNumTraits<morita::RatFun> {};

}  // namespace Eigen

namespace morita {

template <typename T>
using Mat = Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic>;
template <typename T>
using Vec = Eigen::Matrix<T, Eigen::Dynamic, 1>;

using Index = Eigen::Index;

// Rational constants.
using QMatrix = Mat<Rational>;
// Matrices over Q(x); every entry is individually reduced.
using RatMatrix = Mat<RatFun>;
// Matrices of homogeneous polynomials in (s, t).
using HomoMatrix = Mat<HomoPoly>;

template <typename To, typename From>
Mat<To> cast_matrix(const Mat<From>& m) {
  Mat<To> out(m.rows(), m.cols());
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) out(i, j) = To(m(i, j));
  return out;
}

template <typename T>
bool is_zero_matrix(const Mat<T>& m) {
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j)
      if (!is_zero(m(i, j))) return false;
  return true;
}

}  // namespace morita
