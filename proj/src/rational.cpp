#include "morita/rational.hpp"

#include <cctype>

#include "morita/error.hpp"
#include "term_format.hpp"

namespace morita {

std::string to_string(const Rational& q) {
  const Integer num = numerator(q);
  const Integer den = denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Rational parse_rational(std::string_view text) {
  auto digits = [](std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  const auto slash = text.find('/');
  const std::string_view num_part = text.substr(0, slash);
  const std::string_view den_part =
      slash == std::string_view::npos ? std::string_view("1")
                                      : text.substr(slash + 1);
  if (!digits(num_part) || !digits(den_part))
    throw ParseError("malformed rational '" + std::string(text) + "'");
  const Integer den{std::string(den_part)};
  if (den == 0) throw ParseError("zero denominator in rational constant");
  Rational q(Integer{std::string(num_part)}, den);
  return negative ? Rational(-q) : q;
}

namespace detail {

void append_term(std::string& out, const Rational& c,
                 const std::string& monomial) {
  const bool negative = c < 0;
  const Rational magnitude = negative ? Rational(-c) : c;
  if (out.empty()) {
    if (negative) out += "-";
  } else {
    out += negative ? " - " : " + ";
  }
  if (monomial.empty()) {
    out += to_string(magnitude);
  } else if (magnitude == 1) {
    out += monomial;
  } else {
    out += to_string(magnitude) + "*" + monomial;
  }
}

std::string power(char var, std::size_t k) {
  if (k == 0) return {};
  if (k == 1) return std::string(1, var);
  return std::string(1, var) + "^" + std::to_string(k);
}

}  // namespace detail
}  // namespace morita
