#include "morita/ratfun.hpp"

#include "morita/error.hpp"

namespace morita {

RatFun::RatFun(const UniPoly& num, const UniPoly& den) {
  if (den.is_zero())
    throw MathError("division by zero rational function");
  if (num.is_zero()) {
    den_ = UniPoly(1);
    return;
  }
  const UniPoly g = poly_gcd(num, den);
  UniPoly n = g.degree() == 0u ? num : exact_div(num, g);
  UniPoly d = g.degree() == 0u ? den : exact_div(den, g);
  const Rational lead = d.leading();
  if (lead != 1) {
    const Rational inv = 1 / lead;
    n *= inv;
    d *= inv;
  }
  num_ = std::move(n);
  den_ = std::move(d);
}

Rational RatFun::operator()(const Rational& x) const {
  const Rational d = den_(x);
  if (d.is_zero()) throw MathError("rational function evaluated at a pole");
  return num_(x) / d;
}

RatFun RatFun::inverse() const {
  if (is_zero()) throw MathError("division by zero rational function");
  return RatFun(den_, num_);
}

RatFun& RatFun::operator+=(const RatFun& other) {
  if (other.is_zero()) return *this;
  if (is_zero()) return *this = other;
  if (is_polynomial() && other.is_polynomial()) {
    num_ += other.num_;
    return *this;
  }
  if (den_ == other.den_) return *this = RatFun(num_ + other.num_, den_);
  // Henrici: only the part of the sum sharing the denominator gcd can cancel.
  const UniPoly g = poly_gcd(den_, other.den_);
  if (g.degree() == 0u)
    return *this = RatFun(num_ * other.den_ + other.num_ * den_,
                          den_ * other.den_, Reduced{});
  const UniPoly a = exact_div(den_, g);
  const UniPoly b = exact_div(other.den_, g);
  return *this = RatFun(num_ * b + other.num_ * a, a * other.den_);
}

RatFun& RatFun::operator-=(const RatFun& other) { return *this += -other; }

RatFun& RatFun::operator*=(const RatFun& other) {
  if (is_zero() || other.is_zero()) return *this = RatFun();
  if (is_polynomial() && other.is_polynomial()) {
    num_ *= other.num_;
    return *this;
  }
  // Cross-cancel so the product is already reduced.
  const UniPoly g1 = poly_gcd(num_, other.den_);
  const UniPoly g2 = poly_gcd(other.num_, den_);
  UniPoly n = exact_div(num_, g1) * exact_div(other.num_, g2);
  UniPoly d = exact_div(den_, g2) * exact_div(other.den_, g1);
  const Rational lead = d.leading();
  if (lead != 1) {
    const Rational inv = 1 / lead;
    n *= inv;
    d *= inv;
  }
  return *this = RatFun(std::move(n), std::move(d), Reduced{});
}

RatFun& RatFun::operator/=(const RatFun& other) {
  return *this *= other.inverse();
}

RatFun RatFun::operator-() const { return RatFun(-num_, den_, Reduced{}); }

RatFun derivative(const RatFun& f) {
  if (f.is_polynomial()) return RatFun(derivative(f.num()));
  return RatFun(derivative(f.num()) * f.den() - f.num() * derivative(f.den()),
                f.den() * f.den());
}

namespace {

// p((a x + b)/(c x + d)) * (c x + d)^deg(p).
UniPoly homogenized_substitution(const UniPoly& p, const Rational& a,
                                 const Rational& b, const Rational& c,
                                 const Rational& d) {
  if (p.is_zero()) return {};
  const std::size_t n = *p.degree();
  const UniPoly top(std::vector<Rational>{b, a});
  const UniPoly bottom(std::vector<Rational>{d, c});
  UniPoly out;
  for (std::size_t k = 0; k <= n; ++k) {
    if (p.coeff(k).is_zero()) continue;
    out += p.coeff(k) * (pow(top, k) * pow(bottom, n - k));
  }
  return out;
}

}  // namespace

RatFun compose_moebius(const RatFun& f, const Rational& a, const Rational& b,
                       const Rational& c, const Rational& d) {
  if (f.is_zero()) return f;
  const std::size_t n_num = *f.num().degree();
  const std::size_t n_den = *f.den().degree();
  const UniPoly bottom(std::vector<Rational>{d, c});
  UniPoly num = homogenized_substitution(f.num(), a, b, c, d);
  UniPoly den = homogenized_substitution(f.den(), a, b, c, d);
  if (n_den > n_num)
    num *= pow(bottom, n_den - n_num);
  else if (n_num > n_den)
    den *= pow(bottom, n_num - n_den);
  return RatFun(num, den);
}

std::string to_string(const RatFun& f) {
  if (f.is_polynomial()) return to_string(f.num());
  return "(" + to_string(f.num()) + ")/(" + to_string(f.den()) + ")";
}

}  // namespace morita
