#pragma once

#include <string>

#include "morita/poly.hpp"

namespace morita {

// Element of Q(x) in canonical form: numerator and monic denominator are
// coprime, zero is 0/1. Equality is therefore structural.
class RatFun {
 public:
  RatFun() : den_(1) {}
  RatFun(int c) : num_(c), den_(1) {}
  RatFun(const Rational& c) : num_(c), den_(1) {}
  RatFun(UniPoly p) : num_(std::move(p)), den_(1) {}
  // Reduces num/den; throws MathError("division by zero rational function").
  RatFun(const UniPoly& num, const UniPoly& den);

  static RatFun x() { return RatFun(UniPoly::x()); }

  const UniPoly& num() const { return num_; }
  const UniPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0u; }

  bool defined_at(const Rational& x) const { return !den_(x).is_zero(); }
  // Throws MathError at a pole.
  Rational operator()(const Rational& x) const;

  RatFun inverse() const;

  RatFun& operator+=(const RatFun& other);
  RatFun& operator-=(const RatFun& other);
  RatFun& operator*=(const RatFun& other);
  RatFun& operator/=(const RatFun& other);

  friend RatFun operator+(RatFun a, const RatFun& b) { return a += b; }
  friend RatFun operator-(RatFun a, const RatFun& b) { return a -= b; }
  friend RatFun operator*(RatFun a, const RatFun& b) { return a *= b; }
  friend RatFun operator/(RatFun a, const RatFun& b) { return a /= b; }
  RatFun operator-() const;

  friend bool operator==(const RatFun&, const RatFun&) = default;

 private:
  struct Reduced {};
  RatFun(UniPoly num, UniPoly den, Reduced)
      : num_(std::move(num)), den_(std::move(den)) {}

  UniPoly num_;
  UniPoly den_;
};

inline bool is_zero(const RatFun& f) { return f.is_zero(); }

inline RatFun ratfun_reduce(const UniPoly& n, const UniPoly& d) {
  return RatFun(n, d);
}

RatFun derivative(const RatFun& f);

// f((a*x + b) / (c*x + d)).
RatFun compose_moebius(const RatFun& f, const Rational& a, const Rational& b,
                       const Rational& c, const Rational& d);

// "num" for polynomials, otherwise "(num)/(den)".
std::string to_string(const RatFun& f);

inline std::ostream& operator<<(std::ostream& os, const RatFun& f) {
  return os << to_string(f);
}

}  // namespace morita
