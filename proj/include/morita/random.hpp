#pragma once

// Seeded generators for the law suites and the randomized tests.

#include <cstdint>
#include <random>

#include "morita/curve.hpp"
#include "morita/eigen.hpp"

namespace morita {

using Rng = std::mt19937_64;

// Uniform integer in [lo, hi].
Rational random_integer(Rng& rng, int lo, int hi);

// Integer coefficients in [-bound, bound], degree at most max_degree.
UniPoly random_unipoly(Rng& rng, std::size_t max_degree, int bound);

// Non-constant numerator over a monic denominator.
RatFun random_ratfun(Rng& rng, std::size_t max_degree, int bound);

QMatrix random_qmatrix(Rng& rng, Index rows, Index cols, int bound);

// Redraws until the determinant is nonzero.
QMatrix random_invertible(Rng& rng, Index n, int bound);

// Polynomial matrix function with entries of degree <= max_degree.
RatMatrix random_poly_matrix(Rng& rng, Index n, std::size_t max_degree,
                             int bound);

HomoPoly random_homo_poly(Rng& rng, std::size_t degree, int bound);

// Independent random entries; column degrees uniform in [0, max_degree].
HomogeneousCurve random_curve(Rng& rng, Index d, std::size_t max_degree,
                              int bound);

// basis * mixing: a random basis with column degrees drawn from
// [0, max_degree / 2] times a random homogeneous d x d matrix, so the product
// usually has base points and non-minimal column degrees <= max_degree.
HomogeneousCurve random_mixed_curve(Rng& rng, Index d, std::size_t max_degree,
                                    int bound);

}  // namespace morita
