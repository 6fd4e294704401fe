#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <string_view>

namespace morita {

// GMP-backed fraction, always kept in lowest terms with a positive denominator.
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational =
    boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                  boost::multiprecision::et_off>;

inline bool is_zero(const Rational& q) { return q.is_zero(); }

inline Rational make_rational(long num, long den = 1) {
  return Rational(Integer(num), Integer(den));
}

// "p" or "p/q".
std::string to_string(const Rational& q);

// Accepts an optional sign, digits, and an optional "/digits" part.
Rational parse_rational(std::string_view text);

}  // namespace morita
