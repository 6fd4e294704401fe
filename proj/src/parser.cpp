#include "morita/parser.hpp"

#include <cctype>
#include <string>

#include "morita/error.hpp"

namespace morita {
namespace {

// Value algebra for the s,t grammar.
struct BiPolyAlgebra {
  using Value = BiPoly;
  static constexpr std::string_view variables = "st";

  static Value constant(const Rational& c) {
    Value v;
    if (!c.is_zero()) v[{0, 0}] = c;
    return v;
  }
  static Value variable(char name) {
    return name == 's' ? Value{{{1, 0}, Rational(1)}} : Value{{{0, 1}, Rational(1)}};
  }
  static Value add(Value a, const Value& b, int sign) {
    for (const auto& [mono, c] : b) {
      Rational& slot = a[mono];
      slot += sign * c;
      if (slot.is_zero()) a.erase(mono);
    }
    return a;
  }
  static Value mul(const Value& a, const Value& b) {
    Value out;
    for (const auto& [ma, ca] : a)
      for (const auto& [mb, cb] : b) {
        const std::pair<std::size_t, std::size_t> mono{ma.first + mb.first,
                                                       ma.second + mb.second};
        Rational& slot = out[mono];
        slot += ca * cb;
        if (slot.is_zero()) out.erase(mono);
      }
    return out;
  }
  static Value div(const Value& a, const Value& b) {
    if (b.size() != 1 || b.begin()->first != std::pair<std::size_t, std::size_t>{0, 0})
      throw MathError("polynomial entries may only be divided by nonzero constants");
    return mul(a, constant(1 / b.begin()->second));
  }
  static Value neg(const Value& a) { return add(Value{}, a, -1); }
};

struct RatFunAlgebra {
  using Value = RatFun;
  static constexpr std::string_view variables = "x";

  static Value constant(const Rational& c) { return RatFun(c); }
  static Value variable(char) { return RatFun::x(); }
  static Value add(const Value& a, const Value& b, int sign) {
    return sign > 0 ? a + b : a - b;
  }
  static Value mul(const Value& a, const Value& b) { return a * b; }
  static Value div(const Value& a, const Value& b) { return a / b; }
  static Value neg(const Value& a) { return -a; }
};

// expr   := term (('+' | '-') term)*
// term   := unary (('*' | '/')? unary)*
// unary  := ('+' | '-') unary | power
// power  := primary ('^' digits)?
// primary:= number | variable | '(' expr ')'
template <typename Algebra>
class Parser {
 public:
  using Value = typename Algebra::Value;

  explicit Parser(std::string_view text) : text_(text) {}

  Value parse() {
    skip_space();
    if (at_end()) fail("empty expression");
    Value v = expr();
    skip_space();
    if (!at_end()) fail(std::string("unexpected character '") + peek() + "'");
    return v;
  }

 private:
  Value expr() {
    Value v = term();
    while (true) {
      skip_space();
      if (at_end() || (peek() != '+' && peek() != '-')) return v;
      const int sign = get() == '+' ? 1 : -1;
      v = Algebra::add(std::move(v), term(), sign);
    }
  }

  Value term() {
    Value v = unary();
    while (true) {
      skip_space();
      if (at_end()) return v;
      const char c = peek();
      if (c == '*') {
        get();
        v = Algebra::mul(v, unary());
      } else if (c == '/') {
        get();
        const std::size_t where = pos_;
        Value rhs = unary();
        try {
          v = Algebra::div(v, rhs);
        } catch (const MathError& e) {
          fail_at(where, e.what());
        }
      } else if (starts_factor(c)) {
        v = Algebra::mul(v, power());
      } else {
        return v;
      }
    }
  }

  Value unary() {
    skip_space();
    if (at_end()) fail("expected an operand");
    if (peek() == '-') {
      get();
      return Algebra::neg(unary());
    }
    if (peek() == '+') {
      get();
      return unary();
    }
    return power();
  }

  Value power() {
    Value base = primary();
    skip_space();
    if (!at_end() && peek() == '^') {
      get();
      skip_space();
      const std::string digits = read_digits();
      if (digits.empty()) fail("expected a nonnegative integer exponent");
      if (digits.size() > 4) fail("exponent too large");
      Value out = Algebra::constant(Rational(1));
      for (int k = std::stoi(digits); k > 0; --k) out = Algebra::mul(out, base);
      return out;
    }
    return base;
  }

  Value primary() {
    skip_space();
    if (at_end()) fail("expected an operand");
    const char c = peek();
    if (c == '(') {
      get();
      Value v = expr();
      skip_space();
      if (at_end() || get() != ')') fail("expected ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return number();
    if (Algebra::variables.find(c) != std::string_view::npos) {
      get();
      return Algebra::variable(c);
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  // digits, or digits/digits when a digit follows the slash
  Value number() {
    const std::string num = read_digits();
    std::string den = "1";
    if (pos_ + 1 < text_.size() && text_[pos_] == '/' &&
        std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
      const std::size_t where = pos_;
      get();
      den = read_digits();
      if (Integer{den} == 0) fail_at(where, "zero denominator");
    }
    return Algebra::constant(Rational(Integer{num}, Integer{den}));
  }

  bool starts_factor(char c) const {
    return c == '(' || std::isdigit(static_cast<unsigned char>(c)) ||
           Algebra::variables.find(c) != std::string_view::npos;
  }

  std::string read_digits() {
    std::string out;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek())))
      out += get();
    return out;
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  char get() { return text_[pos_++]; }

  [[noreturn]] void fail(const std::string& what) const { fail_at(pos_, what); }
  [[noreturn]] void fail_at(std::size_t where, const std::string& what) const {
    throw ParseError(what, 1, where + 1);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

BiPoly parse_bipoly(std::string_view text) {
  return Parser<BiPolyAlgebra>(text).parse();
}

std::set<std::size_t> monomial_degrees(const BiPoly& p) {
  std::set<std::size_t> out;
  for (const auto& [mono, c] : p) out.insert(mono.first + mono.second);
  return out;
}

HomoPoly to_homo_poly(const BiPoly& p, std::size_t degree) {
  HomoPoly out = HomoPoly::zero(degree);
  for (const auto& [mono, c] : p) {
    if (mono.first + mono.second != degree)
      throw MathError("monomial degree differs from the column degree");
    out += HomoPoly::monomial(c, mono.first, mono.second);
  }
  return out;
}

RatFun parse_ratfun(std::string_view text) {
  try {
    return Parser<RatFunAlgebra>(text).parse();
  } catch (const MathError& e) {
    throw ParseError(e.what());
  }
}

}  // namespace morita
