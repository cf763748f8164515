#pragma once

#include <compare>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "qzf/rational.hpp"

namespace qzf {

/// Largest conductor any operation may produce.
inline constexpr int kMaxConductor = 5040;

int euler_phi(int m);

/// Coefficients of the m-th cyclotomic polynomial, lowest degree first.
const std::vector<long>& cyclotomic_polynomial(int m);

/// Exact element of Q(zeta_m), stored as a polynomial in zeta_m of degree
/// below phi(m), reduced modulo the m-th cyclotomic polynomial.
///
/// Binary operations on values of different conductors lift both operands to
/// the lcm; the result never drops back to a smaller conductor, so values
/// built from one group's matrices all share a single conductor.
class Cyclotomic {
 public:
  Cyclotomic() : conductor_(1), coeffs_(1) {}
  Cyclotomic(long value) : conductor_(1), coeffs_{Rational(value)} {}  // NOLINT
  Cyclotomic(const Rational& value) : conductor_(1), coeffs_{value} {}  // NOLINT
  Cyclotomic(int conductor, std::vector<Rational> coeffs);

  /// zeta_m^k.
  static Cyclotomic zeta(int m, long k = 1);

  int conductor() const { return conductor_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_rational() const;
  /// Throws ArithmeticError unless is_rational().
  Rational rational_value() const;

  /// Image under zeta_m -> zeta_target^(target/m). Requires m | target.
  Cyclotomic lifted(int target) const;

  /// Field automorphism zeta -> zeta^k, gcd(k, m) = 1.
  Cyclotomic galois(long k) const;
  Cyclotomic conj() const { return galois(conductor_ - 1); }

  Cyclotomic inverse() const;

  Cyclotomic operator-() const;
  Cyclotomic& operator+=(const Cyclotomic& rhs);
  Cyclotomic& operator-=(const Cyclotomic& rhs);
  Cyclotomic& operator*=(const Cyclotomic& rhs);
  Cyclotomic& operator/=(const Cyclotomic& rhs);

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) { return a * b.inverse(); }

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);

  /// Canonical text "a0+a1*z+a2*z^2+..." with z = zeta_conductor; "0" for zero.
  std::string str() const;
  /// Parses the canonical text form at the given conductor.
  static Cyclotomic parse(std::string_view text, int conductor);

 private:
  void lift_to(int target);

  int conductor_;
  std::vector<Rational> coeffs_;
};

inline bool is_zero(const Cyclotomic& c) { return c.is_zero(); }
inline std::string to_string(const Cyclotomic& c) { return c.str(); }
inline std::ostream& operator<<(std::ostream& os, const Cyclotomic& c) { return os << c.str(); }
inline Cyclotomic conj(const Cyclotomic& c) { return c.conj(); }
Cyclotomic abs2(const Cyclotomic& c);

/// Representation order: conductor first, then coefficients. Only meaningful
/// as a map key for values that already share a conductor.
struct CyclotomicLess {
  bool operator()(const Cyclotomic& a, const Cyclotomic& b) const;
};

/// sqrt(5) = zeta5 - zeta5^2 - zeta5^3 + zeta5^4 (quadratic Gauss sum).
Cyclotomic sqrt5();
/// sqrt(-3) = 1 + 2 zeta3.
Cyclotomic sqrt_minus3();
/// i = zeta4.
inline Cyclotomic imag_unit() { return Cyclotomic::zeta(4); }

long lcm_conductor(long a, long b);

}  // namespace qzf

namespace Eigen {

template <>
struct NumTraits<qzf::Cyclotomic> : GenericNumTraits<qzf::Cyclotomic> {
  using Real = qzf::Cyclotomic;
  using NonInteger = qzf::Cyclotomic;
  using Nested = qzf::Cyclotomic;
  using Literal = qzf::Cyclotomic;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 20,
    AddCost = 200,
    MulCost = 800
  };
};

}  // namespace Eigen
