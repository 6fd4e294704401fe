#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "morita/poly.hpp"

namespace morita {

// Homogeneous polynomial of fixed total degree e in (s, t).
// coefficients()[k] multiplies s^(e-k) t^k. The zero polynomial of every
// degree is representable; when adding, a zero operand adopts the degree of
// the other one.
class HomoPoly {
 public:
  HomoPoly() : coeffs_(1) {}
  HomoPoly(int c) : HomoPoly(Rational(c)) {}
  HomoPoly(const Rational& c) : coeffs_{c} {}
  HomoPoly(std::size_t degree, std::vector<Rational> coefficients);

  static HomoPoly zero(std::size_t degree);
  // c * s^i * t^j
  static HomoPoly monomial(const Rational& c, std::size_t i, std::size_t j);
  static HomoPoly s() { return monomial(Rational(1), 1, 0); }
  static HomoPoly t() { return monomial(Rational(1), 0, 1); }

  std::size_t degree() const { return coeffs_.size() - 1; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  const Rational& coeff(std::size_t k) const { return coeffs_[k]; }
  bool is_zero() const;

  Rational operator()(const Rational& s, const Rational& t) const;

  HomoPoly& operator+=(const HomoPoly& other);
  HomoPoly& operator-=(const HomoPoly& other);
  HomoPoly& operator*=(const HomoPoly& other);
  HomoPoly& operator*=(const Rational& c);

  friend HomoPoly operator+(HomoPoly a, const HomoPoly& b) { return a += b; }
  friend HomoPoly operator-(HomoPoly a, const HomoPoly& b) { return a -= b; }
  friend HomoPoly operator*(const HomoPoly& a, const HomoPoly& b);
  friend HomoPoly operator*(HomoPoly a, const Rational& c) { return a *= c; }
  friend HomoPoly operator*(const Rational& c, HomoPoly a) { return a *= c; }
  friend HomoPoly operator*(int c, HomoPoly a) { return a *= Rational(c); }
  HomoPoly operator-() const;

  // Equal as polynomials; zeros of different degrees compare equal.
  friend bool operator==(const HomoPoly& a, const HomoPoly& b);

 private:
  std::vector<Rational> coeffs_;
};

inline bool is_zero(const HomoPoly& p) { return p.is_zero(); }

// x = s/t, i.e. t = 1.
UniPoly dehomogenize(const HomoPoly& p);
// Requires degree >= deg(p).
HomoPoly homogenize(const UniPoly& p, std::size_t degree);

// Largest power of t dividing p (degree() + 1 for the zero polynomial).
std::size_t t_multiplicity(const HomoPoly& p);

// p * s^i * t^j
HomoPoly shift(const HomoPoly& p, std::size_t i, std::size_t j);

// Gcd normalized so that its dehomogenized part is monic.
HomoPoly homo_gcd(const HomoPoly& a, const HomoPoly& b);

// a / b; throws MathError unless exact.
HomoPoly exact_div(const HomoPoly& a, const HomoPoly& b);

// p(a s + b t, c s + d t)
HomoPoly substitute(const HomoPoly& p, const Rational& a, const Rational& b,
                    const Rational& c, const Rational& d);

// Descending powers of s, e.g. "3/2*s^2*t - t^3".
std::string to_string(const HomoPoly& p);

inline std::ostream& operator<<(std::ostream& os, const HomoPoly& p) {
  return os << to_string(p);
}

}  // namespace morita
