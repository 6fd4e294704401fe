#pragma once

// Polynomial / rational-function expression strings, e.g. "3/2*s^2*t - t^3"
// or "(x^2 + 1)/(2x - 1)". Multiplication may be implicit; powers take
// nonnegative integer exponents. Errors are ParseError with line 1 and the
// 1-based character column inside the string.

#include <map>
#include <set>
#include <string_view>
#include <utility>

#include "morita/homo_poly.hpp"
#include "morita/ratfun.hpp"

namespace morita {

// Sparse polynomial in (s, t): key (i, j) is the monomial s^i t^j.
using BiPoly = std::map<std::pair<std::size_t, std::size_t>, Rational>;

// Polynomial in s and t; division only by nonzero constants.
BiPoly parse_bipoly(std::string_view text);

// Total degrees of the nonzero monomials; empty for the zero polynomial.
std::set<std::size_t> monomial_degrees(const BiPoly& p);

// Homogeneous polynomial of the given degree; throws MathError if p has a
// monomial of a different degree.
HomoPoly to_homo_poly(const BiPoly& p, std::size_t degree);

// Rational function in x.
RatFun parse_ratfun(std::string_view text);

}  // namespace morita
