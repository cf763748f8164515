#include "qzf/polynomial.hpp"

#include <cctype>

namespace qzf {

std::string to_string(const Monomial& m) {
  if (m.a == 0 && m.b == 0) return "1";
  std::string s;
  if (m.a > 0) s += m.a == 1 ? "x" : "x^" + std::to_string(m.a);
  if (m.b > 0) {
    if (!s.empty()) s += "*";
    s += m.b == 1 ? "y" : "y^" + std::to_string(m.b);
  }
  return s;
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view t) : t_(t) {}

  Polynomial parse() {
    Polynomial p;
    skip();
    if (pos_ == t_.size()) fail("empty polynomial");
    bool first = true;
    while (pos_ < t_.size()) {
      Rational sign(1);
      if (peek() == '+' || peek() == '-') {
        if (peek() == '-') sign = -1;
        ++pos_;
        skip();
      } else if (!first) {
        fail("expected + or -");
      }
      first = false;
      auto [coef, mono] = term();
      p.add_term(mono, Cyclotomic(Rational(sign * coef)));
      skip();
    }
    return p;
  }

 private:
  char peek() const { return pos_ < t_.size() ? t_[pos_] : '\0'; }
  void skip() {
    while (pos_ < t_.size() && std::isspace(static_cast<unsigned char>(t_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ArithmeticError("parse_polynomial: " + what + " at offset " + std::to_string(pos_) + " in \"" +
                          std::string(t_) + "\"");
  }
  long integer() {
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected digit");
    long v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) v = 10 * v + (t_[pos_++] - '0');
    return v;
  }
  Rational number() {
    std::string digits;
    while (std::isdigit(static_cast<unsigned char>(peek()))) digits += t_[pos_++];
    Rational r(Integer(digits, 10));
    skip();
    if (peek() == '/') {
      ++pos_;
      skip();
      std::string den;
      while (std::isdigit(static_cast<unsigned char>(peek()))) den += t_[pos_++];
      if (den.empty()) fail("expected denominator");
      r /= Rational(Integer(den, 10));
    }
    return r;
  }
  std::pair<Rational, Monomial> term() {
    Rational c(1);
    Monomial m;
    bool any = false;
    while (true) {
      skip();
      const char ch = peek();
      if (std::isdigit(static_cast<unsigned char>(ch))) {
        c *= number();
      } else if (ch == 'x' || ch == 'y') {
        ++pos_;
        skip();
        int e = 1;
        if (peek() == '^') {
          ++pos_;
          skip();
          e = static_cast<int>(integer());
        }
        (ch == 'x' ? m.a : m.b) += e;
      } else {
        break;
      }
      any = true;
      skip();
      if (peek() == '*') {
        ++pos_;
        continue;
      }
    }
    if (!any) fail("expected term");
    return {c, m};
  }

  std::string_view t_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text) { return Parser(text).parse(); }

}  // namespace qzf
