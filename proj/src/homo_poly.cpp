#include "morita/homo_poly.hpp"

#include <algorithm>

#include "morita/error.hpp"
#include "term_format.hpp"

namespace morita {

HomoPoly::HomoPoly(std::size_t degree, std::vector<Rational> coefficients)
    : coeffs_(std::move(coefficients)) {
  if (coeffs_.size() != degree + 1)
    throw MathError("homogeneous polynomial needs degree + 1 coefficients");
}

HomoPoly HomoPoly::zero(std::size_t degree) {
  return HomoPoly(degree, std::vector<Rational>(degree + 1));
}

HomoPoly HomoPoly::monomial(const Rational& c, std::size_t i, std::size_t j) {
  HomoPoly p = zero(i + j);
  p.coeffs_[j] = c;
  return p;
}

bool HomoPoly::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const Rational& c) { return c.is_zero(); });
}

Rational HomoPoly::operator()(const Rational& s, const Rational& t) const {
  // Power tables rather than Horner in s/t, so t = 0 needs no special case.
  Rational acc = 0;
  Rational t_pow = 1;
  std::vector<Rational> s_pows(coeffs_.size(), Rational(1));
  for (std::size_t k = 1; k < s_pows.size(); ++k)
    s_pows[k] = s_pows[k - 1] * s;
  const std::size_t e = degree();
  for (std::size_t k = 0; k <= e; ++k) {
    if (!coeffs_[k].is_zero()) acc += coeffs_[k] * s_pows[e - k] * t_pow;
    t_pow *= t;
  }
  return acc;
}

HomoPoly& HomoPoly::operator+=(const HomoPoly& other) {
  if (other.degree() != degree()) {
    if (other.is_zero()) return *this;
    if (!is_zero())
      throw MathError(
          "adding homogeneous polynomials of different degrees");
    coeffs_ = other.coeffs_;
    return *this;
  }
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
  return *this;
}

HomoPoly& HomoPoly::operator-=(const HomoPoly& other) {
  return *this += -other;
}

HomoPoly operator*(const HomoPoly& a, const HomoPoly& b) {
  HomoPoly out = HomoPoly::zero(a.degree() + b.degree());
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return out;
}

HomoPoly& HomoPoly::operator*=(const HomoPoly& other) {
  *this = *this * other;
  return *this;
}

HomoPoly& HomoPoly::operator*=(const Rational& c) {
  for (auto& x : coeffs_) x *= c;
  return *this;
}

HomoPoly HomoPoly::operator-() const {
  HomoPoly out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

bool operator==(const HomoPoly& a, const HomoPoly& b) {
  if (a.degree() != b.degree()) return a.is_zero() && b.is_zero();
  return a.coeffs_ == b.coeffs_;
}

UniPoly dehomogenize(const HomoPoly& p) {
  const std::size_t e = p.degree();
  std::vector<Rational> out(e + 1);
  for (std::size_t k = 0; k <= e; ++k) out[e - k] = p.coeff(k);
  return UniPoly(std::move(out));
}

HomoPoly homogenize(const UniPoly& p, std::size_t degree) {
  if (p.degree() && *p.degree() > degree)
    throw MathError("homogenization degree below polynomial degree");
  std::vector<Rational> coeffs(degree + 1);
  for (std::size_t k = 0; k <= degree; ++k) coeffs[k] = p.coeff(degree - k);
  return HomoPoly(degree, std::move(coeffs));
}

std::size_t t_multiplicity(const HomoPoly& p) {
  std::size_t k = 0;
  while (k < p.coefficients().size() && p.coeff(k).is_zero()) ++k;
  return k;
}

HomoPoly shift(const HomoPoly& p, std::size_t i, std::size_t j) {
  std::vector<Rational> out(p.degree() + i + j + 1);
  for (std::size_t k = 0; k <= p.degree(); ++k) out[k + j] = p.coeff(k);
  return HomoPoly(p.degree() + i + j, std::move(out));
}

HomoPoly homo_gcd(const HomoPoly& a, const HomoPoly& b) {
  if (a.is_zero() && b.is_zero()) return HomoPoly();
  if (a.is_zero()) return homo_gcd(b, b);
  if (b.is_zero()) return homo_gcd(a, a);
  const std::size_t t_pow = std::min(t_multiplicity(a), t_multiplicity(b));
  const UniPoly g = poly_gcd(dehomogenize(a), dehomogenize(b));
  return shift(homogenize(g, *g.degree()), 0, t_pow);
}

HomoPoly exact_div(const HomoPoly& a, const HomoPoly& b) {
  if (b.is_zero()) throw MathError("polynomial division by zero");
  if (a.is_zero()) {
    if (a.degree() < b.degree()) return HomoPoly();
    return HomoPoly::zero(a.degree() - b.degree());
  }
  if (a.degree() < b.degree())
    throw MathError("polynomial division is not exact");
  const UniPoly q = exact_div(dehomogenize(a), dehomogenize(b));
  const std::size_t e = a.degree() - b.degree();
  if (*q.degree() > e) throw MathError("polynomial division is not exact");
  return homogenize(q, e);
}

namespace {

HomoPoly pow(const HomoPoly& p, std::size_t k) {
  HomoPoly out(1);
  for (std::size_t i = 0; i < k; ++i) out *= p;
  return out;
}

}  // namespace

HomoPoly substitute(const HomoPoly& p, const Rational& a, const Rational& b,
                    const Rational& c, const Rational& d) {
  const HomoPoly first(1, {a, b});
  const HomoPoly second(1, {c, d});
  const std::size_t e = p.degree();
  HomoPoly out = HomoPoly::zero(e);
  for (std::size_t k = 0; k <= e; ++k) {
    if (p.coeff(k).is_zero()) continue;
    out += p.coeff(k) * (pow(first, e - k) * pow(second, k));
  }
  return out;
}

std::string to_string(const HomoPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  const std::size_t e = p.degree();
  for (std::size_t k = 0; k <= e; ++k) {
    if (p.coeff(k).is_zero()) continue;
    std::string mono = detail::power('s', e - k);
    const std::string tp = detail::power('t', k);
    if (!tp.empty()) mono = mono.empty() ? tp : mono + "*" + tp;
    detail::append_term(out, p.coeff(k), mono);
  }
  return out;
}

}  // namespace morita
