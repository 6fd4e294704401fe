#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "morita/rational.hpp"

namespace morita {

// Dense univariate polynomial over Q in the affine coordinate x.
// coefficients()[k] is the coefficient of x^k; the zero polynomial has no
// coefficients and no degree.
class UniPoly {
 public:
  UniPoly() = default;
  UniPoly(int c) : UniPoly(Rational(c)) {}
  UniPoly(const Rational& c);
  explicit UniPoly(std::vector<Rational> coefficients);

  static UniPoly x();
  static UniPoly monomial(const Rational& c, std::size_t k);

  bool is_zero() const { return coeffs_.empty(); }
  std::optional<std::size_t> degree() const;
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  Rational coeff(std::size_t k) const;
  const Rational& leading() const;  // requires !is_zero()
  UniPoly monic() const;            // zero stays zero

  Rational operator()(const Rational& x) const;

  UniPoly& operator+=(const UniPoly& other);
  UniPoly& operator-=(const UniPoly& other);
  UniPoly& operator*=(const UniPoly& other);
  UniPoly& operator*=(const Rational& c);

  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(UniPoly a, const Rational& c) { return a *= c; }
  friend UniPoly operator*(const Rational& c, UniPoly a) { return a *= c; }
  friend UniPoly operator*(int c, UniPoly a) { return a *= Rational(c); }
  UniPoly operator-() const;

  friend bool operator==(const UniPoly&, const UniPoly&) = default;

 private:
  void trim();

  std::vector<Rational> coeffs_;
};

inline bool is_zero(const UniPoly& p) { return p.is_zero(); }

UniPoly derivative(const UniPoly& p);

// Quotient and remainder; throws MathError on a zero divisor.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);

// a / b, throws MathError unless b divides a.
UniPoly exact_div(const UniPoly& a, const UniPoly& b);

// Monic gcd; gcd(0, 0) = 0.
UniPoly poly_gcd(const UniPoly& p, const UniPoly& q);

UniPoly pow(const UniPoly& p, std::size_t k);

// Descending powers, e.g. "3/2*x^2 - x + 1".
std::string to_string(const UniPoly& p, char var = 'x');

inline std::ostream& operator<<(std::ostream& os, const UniPoly& p) {
  return os << to_string(p);
}

}  // namespace morita
