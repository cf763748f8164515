#include "qzf/cyclotomic.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>

#include "qzf/error.hpp"

namespace qzf {

namespace {

struct ReductionTable {
  int phi = 0;
  std::vector<long> poly;
  // powers[k] = x^k mod Phi_m for 0 <= k < m, length phi each.
  std::vector<std::vector<Integer>> powers;
};

std::vector<long> poly_divide_exact(std::vector<long> num, const std::vector<long>& den) {
  // den is monic; num has integer coefficients, lowest degree first.
  const int dn = static_cast<int>(den.size()) - 1;
  const int nn = static_cast<int>(num.size()) - 1;
  std::vector<long> q(nn - dn + 1, 0);
  for (int i = nn; i >= dn; --i) {
    long c = num[i];
    q[i - dn] = c;
    if (c == 0) continue;
    for (int j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
  }
  for (int i = 0; i < dn; ++i)
    if (num[i] != 0) throw ArithmeticError("cyclotomic polynomial division not exact");
  return q;
}

std::mutex g_table_mutex;
std::map<int, std::shared_ptr<const ReductionTable>> g_tables;

std::shared_ptr<const ReductionTable> build_table(int m) {
  auto t = std::make_shared<ReductionTable>();
  // Phi_m = (x^m - 1) / prod_{d | m, d < m} Phi_d
  std::vector<long> num(m + 1, 0);
  num[0] = -1;
  num[m] = 1;
  for (int d = 1; d < m; ++d)
    if (m % d == 0) num = poly_divide_exact(num, cyclotomic_polynomial(d));
  t->poly = num;
  t->phi = static_cast<int>(num.size()) - 1;
  const int phi = t->phi;
  t->powers.assign(m, std::vector<Integer>(phi));
  std::vector<Integer> cur(phi);
  cur[0] = 1;
  if (phi == 0) throw ArithmeticError("degenerate cyclotomic polynomial");
  for (int k = 0; k < m; ++k) {
    t->powers[k] = cur;
    // multiply by x and reduce with x^phi = -sum poly[i] x^i
    Integer top = cur[phi - 1];
    for (int i = phi - 1; i > 0; --i) cur[i] = cur[i - 1];
    cur[0] = 0;
    if (top != 0)
      for (int i = 0; i < phi; ++i) cur[i] -= top * t->poly[i];
  }
  return t;
}

std::shared_ptr<const ReductionTable> table_for(int m) {
  {
    std::lock_guard<std::mutex> lock(g_table_mutex);
    auto it = g_tables.find(m);
    if (it != g_tables.end()) return it->second;
  }
  auto t = build_table(m);
  std::lock_guard<std::mutex> lock(g_table_mutex);
  return g_tables.emplace(m, t).first->second;
}

void check_conductor(long m) {
  if (m < 1) throw ArithmeticError("conductor must be positive");
  if (m > kMaxConductor)
    throw ArithmeticError("conductor " + std::to_string(m) + " exceeds cap " + std::to_string(kMaxConductor));
}

// Reduce a dense polynomial in zeta_m (any length) to canonical form.
std::vector<Rational> reduce(int m, const std::vector<Rational>& raw) {
  auto t = table_for(m);
  const int phi = t->phi;
  std::vector<Rational> out(phi);
  for (size_t e = 0; e < raw.size(); ++e) {
    if (sgn(raw[e]) == 0) continue;
    const int k = static_cast<int>(e % m);
    if (k < phi) {
      out[k] += raw[e];
      continue;
    }
    const auto& row = t->powers[k];
    for (int i = 0; i < phi; ++i)
      if (row[i] != 0) out[i] += raw[e] * row[i];
  }
  return out;
}

}  // namespace

int euler_phi(int m) {
  if (m < 1) throw ArithmeticError("euler_phi of non-positive integer");
  int result = m;
  int n = m;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

const std::vector<long>& cyclotomic_polynomial(int m) {
  check_conductor(m);
  if (m == 1) {
    static const std::vector<long> phi1{-1, 1};
    return phi1;
  }
  return table_for(m)->poly;
}

long lcm_conductor(long a, long b) {
  long l = std::lcm(a, b);
  check_conductor(l);
  return l;
}

Cyclotomic::Cyclotomic(int conductor, std::vector<Rational> coeffs) : conductor_(conductor) {
  check_conductor(conductor);
  if (conductor == 1) {
    Rational s;
    for (auto& c : coeffs) s += c;
    coeffs_ = {s};
    return;
  }
  coeffs_ = reduce(conductor, coeffs);
}

Cyclotomic Cyclotomic::zeta(int m, long k) {
  check_conductor(m);
  long e = k % m;
  if (e < 0) e += m;
  std::vector<Rational> raw(e + 1);
  raw[e] = 1;
  return Cyclotomic(m, std::move(raw));
}

bool Cyclotomic::is_zero() const {
  for (const auto& c : coeffs_)
    if (sgn(c) != 0) return false;
  return true;
}

bool Cyclotomic::is_rational() const {
  for (size_t i = 1; i < coeffs_.size(); ++i)
    if (sgn(coeffs_[i]) != 0) return false;
  return true;
}

Rational Cyclotomic::rational_value() const {
  if (!is_rational()) throw ArithmeticError("value is not rational: " + str());
  return coeffs_[0];
}

void Cyclotomic::lift_to(int target) {
  if (target == conductor_) return;
  if (target % conductor_ != 0)
    throw ArithmeticError("cannot lift conductor " + std::to_string(conductor_) + " to " + std::to_string(target));
  check_conductor(target);
  const int step = target / conductor_;
  if (is_rational()) {
    Rational c = coeffs_[0];
    coeffs_.assign(euler_phi(target), Rational(0));
    coeffs_[0] = c;
  } else {
    std::vector<Rational> raw(static_cast<size_t>(coeffs_.size() - 1) * step + 1);
    for (size_t i = 0; i < coeffs_.size(); ++i) raw[i * step] = coeffs_[i];
    coeffs_ = reduce(target, raw);
  }
  conductor_ = target;
}

Cyclotomic Cyclotomic::lifted(int target) const {
  Cyclotomic r = *this;
  r.lift_to(target);
  return r;
}

Cyclotomic Cyclotomic::galois(long k) const {
  const long m = conductor_;
  long e = k % m;
  if (e < 0) e += m;
  if (std::gcd(e, m) != 1 && m > 1) throw ArithmeticError("Galois exponent not coprime to conductor");
  if (is_rational()) return *this;
  std::vector<Rational> raw(m);
  for (size_t i = 0; i < coeffs_.size(); ++i)
    if (sgn(coeffs_[i]) != 0) raw[(i * e) % m] += coeffs_[i];
  return Cyclotomic(conductor_, std::move(raw));
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& rhs) {
  if (rhs.conductor_ == conductor_) {
    for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    return *this;
  }
  if (rhs.is_rational() && conductor_ % rhs.conductor_ == 0) {
    coeffs_[0] += rhs.coeffs_[0];
    return *this;
  }
  const int m = static_cast<int>(lcm_conductor(conductor_, rhs.conductor_));
  lift_to(m);
  Cyclotomic b = rhs.lifted(m);
  for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += b.coeffs_[i];
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& rhs) { return *this += -rhs; }

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
  if (b.is_rational()) {
    const int m = static_cast<int>(lcm_conductor(a.conductor_, b.conductor_));
    Cyclotomic r = a.lifted(m);
    const Rational& s = b.coeffs_[0];
    for (auto& c : r.coeffs_) c *= s;
    return r;
  }
  if (a.is_rational()) return b * a;
  const int m = static_cast<int>(lcm_conductor(a.conductor_, b.conductor_));
  const Cyclotomic& x = a.conductor_ == m ? a : a.lifted(m);
  Cyclotomic ly;
  const Cyclotomic* yp = &b;
  if (b.conductor_ != m) {
    ly = b.lifted(m);
    yp = &ly;
  }
  const auto& xc = x.coeffs_;
  const auto& yc = yp->coeffs_;
  std::vector<Rational> raw(xc.size() + yc.size() - 1);
  for (size_t i = 0; i < xc.size(); ++i) {
    if (sgn(xc[i]) == 0) continue;
    for (size_t j = 0; j < yc.size(); ++j)
      if (sgn(yc[j]) != 0) raw[i + j] += xc[i] * yc[j];
  }
  Cyclotomic r;
  r.conductor_ = m;
  r.coeffs_ = reduce(m, raw);
  return r;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& rhs) { return *this = *this * rhs; }

Cyclotomic& Cyclotomic::operator/=(const Cyclotomic& rhs) { return *this = *this / rhs; }

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw ArithmeticError("division by zero");
  if (is_rational()) {
    Cyclotomic r = *this;
    r.coeffs_[0] = 1 / coeffs_[0];
    return r;
  }
  // Solve (multiplication-by-this) v = e_0 over Q.
  const int m = conductor_;
  const int phi = static_cast<int>(coeffs_.size());
  std::vector<std::vector<Rational>> a(phi, std::vector<Rational>(phi + 1));
  for (int j = 0; j < phi; ++j) {
    Cyclotomic col = *this * zeta(m, j);
    for (int i = 0; i < phi; ++i) a[i][j] = col.coeffs_[i];
  }
  a[0][phi] = 1;
  for (int c = 0; c < phi; ++c) {
    int p = c;
    while (p < phi && sgn(a[p][c]) == 0) ++p;
    if (p == phi) throw ArithmeticError("singular multiplication matrix");
    std::swap(a[p], a[c]);
    Rational inv = 1 / a[c][c];
    for (int j = c; j <= phi; ++j) a[c][j] *= inv;
    for (int i = 0; i < phi; ++i) {
      if (i == c || sgn(a[i][c]) == 0) continue;
      Rational f = a[i][c];
      for (int j = c; j <= phi; ++j) a[i][j] -= f * a[c][j];
    }
  }
  Cyclotomic r;
  r.conductor_ = m;
  r.coeffs_.resize(phi);
  for (int i = 0; i < phi; ++i) r.coeffs_[i] = a[i][phi];
  return r;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.conductor_ == b.conductor_) return a.coeffs_ == b.coeffs_;
  if (a.is_rational() && b.is_rational()) return a.coeffs_[0] == b.coeffs_[0];
  const int m = static_cast<int>(lcm_conductor(a.conductor_, b.conductor_));
  return a.lifted(m).coeffs_ == b.lifted(m).coeffs_;
}

std::string Cyclotomic::str() const {
  std::string out;
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    const Rational& c = coeffs_[i];
    if (sgn(c) == 0) continue;
    std::string term;
    if (i == 0) {
      term = c.get_str();
    } else {
      if (c == 1) {
        term = "";
      } else if (c == -1) {
        term = "-";
      } else {
        term = c.get_str() + "*";
      }
      term += "z";
      if (i > 1) term += "^" + std::to_string(i);
    }
    if (!out.empty() && term.front() != '-') out += "+";
    out += term;
  }
  return out.empty() ? "0" : out;
}

Cyclotomic Cyclotomic::parse(std::string_view text, int conductor) {
  check_conductor(conductor);
  std::vector<Rational> raw(1);
  std::string s(text);
  size_t pos = 0;
  if (s.empty()) throw ArithmeticError("empty cyclotomic literal");
  while (pos < s.size()) {
    size_t end = pos + 1;
    while (end < s.size() && s[end] != '+' && s[end] != '-') ++end;
    // a '-' right after '^' cannot occur since exponents are non-negative
    std::string term = s.substr(pos, end - pos);
    pos = end;
    if (!term.empty() && term[0] == '+') term.erase(0, 1);
    if (term.empty()) throw ArithmeticError("malformed cyclotomic literal: " + s);
    size_t zpos = term.find('z');
    Rational coeff;
    long exponent = 0;
    if (zpos == std::string::npos) {
      coeff = parse_rational(term);
    } else {
      std::string head = term.substr(0, zpos);
      if (head.empty()) {
        coeff = 1;
      } else if (head == "-") {
        coeff = -1;
      } else {
        if (head.back() != '*') throw ArithmeticError("malformed cyclotomic term: " + term);
        coeff = parse_rational(head.substr(0, head.size() - 1));
      }
      std::string tail = term.substr(zpos + 1);
      if (tail.empty()) {
        exponent = 1;
      } else {
        if (tail[0] != '^') throw ArithmeticError("malformed cyclotomic term: " + term);
        exponent = std::stol(tail.substr(1));
      }
    }
    if (exponent < 0) throw ArithmeticError("negative exponent in literal");
    if (static_cast<size_t>(exponent) >= raw.size()) raw.resize(exponent + 1);
    raw[exponent] += coeff;
  }
  return Cyclotomic(conductor, std::move(raw));
}

Cyclotomic abs2(const Cyclotomic& c) { return c * c.conj(); }

bool CyclotomicLess::operator()(const Cyclotomic& a, const Cyclotomic& b) const {
  if (a.conductor() != b.conductor()) return a.conductor() < b.conductor();
  const auto& x = a.coeffs();
  const auto& y = b.coeffs();
  for (size_t i = 0; i < x.size(); ++i) {
    int c = cmp(x[i], y[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

Cyclotomic sqrt5() {
  return Cyclotomic::zeta(5, 1) - Cyclotomic::zeta(5, 2) - Cyclotomic::zeta(5, 3) + Cyclotomic::zeta(5, 4);
}

Cyclotomic sqrt_minus3() { return Cyclotomic(1) + Cyclotomic(2) * Cyclotomic::zeta(3); }

}  // namespace qzf
