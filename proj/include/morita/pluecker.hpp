#pragma once

#include <array>
#include <string>
#include <vector>

#include "morita/curve.hpp"

namespace morita {

// Maximal minors of the curve matrix indexed by sorted d-subsets of rows in
// lexicographic order, with the common polynomial factor removed and scaled
// so the first nonzero coordinate has leading coefficient 1.
struct PlueckerVector {
  Index d = 0;
  std::vector<HomoPoly> coords;
  std::size_t degree = 0;
};

PlueckerVector pluecker_vector(const HomogeneousCurve& c);

std::size_t pluecker_degree(const HomogeneousCurve& c);

// Pair notation for row subsets, e.g. {0, 2} with d = 2 -> "11,21".
std::string pluecker_label(Index d, const std::vector<int>& rows);

// True when a = lambda * b for some nonzero rational lambda.
bool proportional(const std::vector<HomoPoly>& a, const std::vector<HomoPoly>& b);

// d-th compound matrix: entry (I, J) is the minor of g on rows I, columns J.
QMatrix compound_matrix(const QMatrix& g, Index d);

// z_{11,12} z_{21,22} - z_{11,21} z_{12,22} + z_{11,22} z_{12,21}.
// Throws MathError unless d = 2.
HomoPoly klein_quadric_residual(const HomogeneousCurve& c);

// (z_{11,21}, z_{12,22}, z_{11,22} + z_{12,21}), the plane of the Morita
// conic. Throws MathError unless d = 2.
std::array<HomoPoly, 3> morita_plane_residuals(const HomogeneousCurve& c);

}  // namespace morita
