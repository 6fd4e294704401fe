#include "morita/poly.hpp"

#include <algorithm>

#include "morita/error.hpp"
#include "term_format.hpp"

namespace morita {

UniPoly::UniPoly(const Rational& c) {
  if (!c.is_zero()) coeffs_.push_back(c);
}

UniPoly::UniPoly(std::vector<Rational> coefficients)
    : coeffs_(std::move(coefficients)) {
  trim();
}

UniPoly UniPoly::x() { return monomial(Rational(1), 1); }

UniPoly UniPoly::monomial(const Rational& c, std::size_t k) {
  if (c.is_zero()) return {};
  std::vector<Rational> coeffs(k + 1);
  coeffs[k] = c;
  return UniPoly(std::move(coeffs));
}

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

std::optional<std::size_t> UniPoly::degree() const {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.size() - 1;
}

Rational UniPoly::coeff(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : Rational(0);
}

const Rational& UniPoly::leading() const { return coeffs_.back(); }

UniPoly UniPoly::monic() const {
  if (is_zero() || leading() == 1) return *this;
  UniPoly out = *this;
  const Rational inv = 1 / leading();
  for (auto& c : out.coeffs_) c *= inv;
  return out;
}

Rational UniPoly::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * x + *it;
  return acc;
}

UniPoly& UniPoly::operator+=(const UniPoly& other) {
  if (other.coeffs_.size() > coeffs_.size())
    coeffs_.resize(other.coeffs_.size());
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k)
    coeffs_[k] += other.coeffs_[k];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& other) {
  if (other.coeffs_.size() > coeffs_.size())
    coeffs_.resize(other.coeffs_.size());
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k)
    coeffs_[k] -= other.coeffs_[k];
  trim();
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return UniPoly(std::move(out));
}

UniPoly& UniPoly::operator*=(const UniPoly& other) {
  *this = *this * other;
  return *this;
}

UniPoly& UniPoly::operator*=(const Rational& c) {
  if (c.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

UniPoly UniPoly::operator-() const {
  UniPoly out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

UniPoly derivative(const UniPoly& p) {
  const auto& c = p.coefficients();
  if (c.size() <= 1) return {};
  std::vector<Rational> out(c.size() - 1);
  for (std::size_t k = 1; k < c.size(); ++k) out[k - 1] = c[k] * int(k);
  return UniPoly(std::move(out));
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw MathError("polynomial division by zero");
  if (a.is_zero() || *a.degree() < *b.degree()) return {UniPoly(), a};
  const std::size_t db = *b.degree();
  std::vector<Rational> rem = a.coefficients();
  std::vector<Rational> quot(rem.size() - db);
  const Rational inv_lead = 1 / b.leading();
  const auto& bc = b.coefficients();
  for (std::size_t k = rem.size(); k-- > db;) {
    if (rem[k].is_zero()) continue;
    const Rational q = rem[k] * inv_lead;
    quot[k - db] = q;
    for (std::size_t j = 0; j <= db; ++j) rem[k - db + j] -= q * bc[j];
  }
  return {UniPoly(std::move(quot)), UniPoly(std::move(rem))};
}

UniPoly exact_div(const UniPoly& a, const UniPoly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw MathError("polynomial division is not exact");
  return q;
}

UniPoly poly_gcd(const UniPoly& p, const UniPoly& q) {
  UniPoly a = p.monic();
  UniPoly b = q.monic();
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (*a.degree() < *b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    if (*b.degree() == 0) return UniPoly(1);
    UniPoly r = divmod(a, b).second.monic();
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

UniPoly pow(const UniPoly& p, std::size_t k) {
  UniPoly out(1);
  UniPoly base = p;
  while (k > 0) {
    if (k & 1) out *= base;
    k >>= 1;
    if (k > 0) base *= base;
  }
  return out;
}

std::string to_string(const UniPoly& p, char var) {
  if (p.is_zero()) return "0";
  std::string out;
  const auto& c = p.coefficients();
  for (std::size_t k = c.size(); k-- > 0;) {
    if (c[k].is_zero()) continue;
    detail::append_term(out, c[k], detail::power(var, k));
  }
  return out;
}

}  // namespace morita
