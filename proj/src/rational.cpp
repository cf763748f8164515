#include "qzf/rational.hpp"

#include "qzf/error.hpp"

namespace qzf {

std::string to_string(const Rational& q) { return q.get_str(); }

std::string to_string(const Integer& z) { return z.get_str(); }

Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw ArithmeticError("empty rational literal");
  if (s.front() == '+') s.erase(0, 1);
  Rational q;
  if (q.set_str(s, 10) != 0) throw ArithmeticError("malformed rational literal: " + std::string(text));
  if (q.get_den() == 0) throw ArithmeticError("zero denominator in literal: " + std::string(text));
  q.canonicalize();
  return q;
}

Integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

Integer factorial(long n) {
  if (n < 0) throw ArithmeticError("negative factorial");
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

}  // namespace qzf
