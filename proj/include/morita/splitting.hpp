#pragma once

#include <vector>

#include "morita/curve.hpp"

namespace morita {

// Exponents 0 <= a_1 <= ... <= a_d of f*S = O(-a_1) + ... + O(-a_d).
struct SplittingType {
  std::vector<std::size_t> exponents;
  std::size_t width = 0;  // a_d - a_1

  friend bool operator==(const SplittingType&, const SplittingType&) = default;
};

// Sorts the exponents and fills in the width.
SplittingType make_splitting(std::vector<std::size_t> exponents);

struct MinimalBasis {
  HomogeneousCurve basis;
  SplittingType splitting;
};

// Degree-by-degree search over the saturated column module. At degree m the
// homogeneous vectors v with rank [c | v] = d generically form a linear
// space; vectors not generated by lower-degree basis elements are new basis
// columns. Among candidates the reduced echelon basis is scanned in order,
// so the output is deterministic.
MinimalBasis minimal_basis(const HomogeneousCurve& c);

SplittingType splitting_type(const HomogeneousCurve& c);
std::size_t width(const HomogeneousCurve& c);

// Rows: reduced echelon basis of the degree-m vectors in the saturated
// module, each laid out as row r, coefficient k of s^(m-k) t^k at r*(m+1)+k.
QMatrix saturated_degree_space(const HomogeneousCurve& c, std::size_t m);

}  // namespace morita
