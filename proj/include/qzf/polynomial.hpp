#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qzf/cyclotomic.hpp"
#include "qzf/error.hpp"
#include "qzf/rational.hpp"

namespace qzf {

/// x^a y^b.
struct Monomial {
  int a = 0;
  int b = 0;
  int degree() const { return a + b; }
  bool divides(const Monomial& m) const { return a <= m.a && b <= m.b; }
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Lexicographic order with x > y: x^a y^b > x^c y^d iff a > c, or a = c and b > d.
inline bool lex_greater(const Monomial& m, const Monomial& n) { return m.a > n.a || (m.a == n.a && m.b > n.b); }

struct LexGreater {
  bool operator()(const Monomial& m, const Monomial& n) const { return lex_greater(m, n); }
};

inline Monomial lcm(const Monomial& m, const Monomial& n) { return {std::max(m.a, n.a), std::max(m.b, n.b)}; }
inline Monomial operator*(const Monomial& m, const Monomial& n) { return {m.a + n.a, m.b + n.b}; }
/// m / n, requires n | m.
inline Monomial operator/(const Monomial& m, const Monomial& n) { return {m.a - n.a, m.b - n.b}; }

std::string to_string(const Monomial& m);

/// Sparse polynomial in x, y over K; terms kept in decreasing lex order,
/// so terms().begin() is the leading term. Zero coefficients are never stored.
template <typename K>
class Poly {
 public:
  using Terms = std::map<Monomial, K, LexGreater>;

  Poly() = default;
  Poly(const K& c) {  // NOLINT
    if (!qzf::is_zero(c)) terms_.emplace(Monomial{}, c);
  }
  Poly(long c) : Poly(K(c)) {}  // NOLINT
  static Poly monomial(const K& c, int a, int b) {
    Poly p;
    if (!qzf::is_zero(c)) p.terms_.emplace(Monomial{a, b}, c);
    return p;
  }
  static Poly x() { return monomial(K(1), 1, 0); }
  static Poly y() { return monomial(K(1), 0, 1); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  const Monomial& leading_monomial() const { return terms_.begin()->first; }
  const K& leading_coefficient() const { return terms_.begin()->second; }
  int degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
  }
  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    const int d = terms_.begin()->first.degree();
    for (const auto& [m, c] : terms_)
      if (m.degree() != d) return false;
    return true;
  }
  K coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? K(0) : it->second;
  }

  void add_term(const Monomial& m, const K& c) {
    if (qzf::is_zero(c)) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (qzf::is_zero(it->second)) terms_.erase(it);
    }
  }

  Poly& operator+=(const Poly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  Poly operator-() const {
    Poly p;
    for (const auto& [m, c] : terms_) p.terms_.emplace(m, -c);
    return p;
  }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    Poly p;
    for (const auto& [m, c] : a.terms_)
      for (const auto& [n, d] : b.terms_) p.add_term(m * n, c * d);
    return p;
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  /// c m p.
  Poly times_term(const K& c, const Monomial& m) const {
    Poly p;
    if (qzf::is_zero(c)) return p;
    for (const auto& [n, d] : terms_) p.terms_.emplace(n * m, c * d);
    return p;
  }
  Poly scaled(const K& c) const { return times_term(c, Monomial{}); }

  /// Leading coefficient 1.
  Poly monic() const {
    if (is_zero()) return *this;
    return scaled(inverse_of(leading_coefficient()));
  }

  Poly pow(int e) const {
    Poly r(K(1)), b = *this;
    while (e > 0) {
      if (e & 1) r *= b;
      e >>= 1;
      if (e) b *= b;
    }
    return r;
  }

  friend bool operator==(const Poly& a, const Poly& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    auto i = a.terms_.begin();
    for (auto j = b.terms_.begin(); j != b.terms_.end(); ++i, ++j)
      if (!(i->first == j->first) || !(i->second == j->second)) return false;
    return true;
  }

  /// Terms in decreasing lex order: "15*x^4*y^5+y^9", coefficients in their own text form.
  std::string str() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [m, c] : terms_) {
      std::string cs = coefficient_text(c);
      const bool unit_mono = m.a == 0 && m.b == 0;
      std::string body;
      if (unit_mono) {
        body = cs;
      } else if (cs == "1") {
        body = to_string(m);
      } else if (cs == "-1") {
        body = "-" + to_string(m);
      } else {
        const bool compound = cs.find_first_of("+-", 1) != std::string::npos;
        body = (compound ? "(" + cs + ")" : cs) + "*" + to_string(m);
      }
      if (!first && body[0] != '-') s += "+";
      s += body;
      first = false;
    }
    return s;
  }

 private:
  static K inverse_of(const K& c);
  static std::string coefficient_text(const K& c);
  Terms terms_;
};

template <>
inline Rational Poly<Rational>::inverse_of(const Rational& c) {
  return Rational(1) / c;
}
template <>
inline Cyclotomic Poly<Cyclotomic>::inverse_of(const Cyclotomic& c) {
  return c.inverse();
}
template <>
inline std::string Poly<Rational>::coefficient_text(const Rational& c) {
  return to_string(c);
}
template <>
inline std::string Poly<Cyclotomic>::coefficient_text(const Cyclotomic& c) {
  return c.str();
}

using Polynomial = Poly<Cyclotomic>;

template <typename K>
std::ostream& operator<<(std::ostream& os, const Poly<K>& p) {
  return os << p.str();
}

inline std::ostream& operator<<(std::ostream& os, const Monomial& m) { return os << to_string(m); }

template <typename K>
inline Poly<K> operator*(const K& c, const Poly<K>& p) {
  return p.scaled(c);
}

/// p(l1, l2): substitute linear (or arbitrary) polynomials for x and y.
template <typename K>
Poly<K> substitute(const Poly<K>& p, const Poly<K>& l1, const Poly<K>& l2) {
  int max_a = 0, max_b = 0;
  for (const auto& [m, c] : p.terms()) {
    max_a = std::max(max_a, m.a);
    max_b = std::max(max_b, m.b);
  }
  std::vector<Poly<K>> pa{Poly<K>(K(1))}, pb{Poly<K>(K(1))};
  for (int i = 1; i <= max_a; ++i) pa.push_back(pa.back() * l1);
  for (int i = 1; i <= max_b; ++i) pb.push_back(pb.back() * l2);
  Poly<K> out;
  for (const auto& [m, c] : p.terms()) out += (pa[m.a] * pb[m.b]).scaled(c);
  return out;
}

/// Parses sums of terms like "-3/2*x^4*y^5", "x y^2", "14x^4y^4" with rational coefficients.
Polynomial parse_polynomial(std::string_view text);

}  // namespace qzf
