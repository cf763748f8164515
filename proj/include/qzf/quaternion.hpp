#pragma once

#include <string>
#include <vector>

#include "qzf/cyclotomic.hpp"

namespace qzf {

/// q = z1 + j z2 with z1, z2 complex cyclotomic numbers. With this model
/// i = (zeta4, 0), j = (0, 1), k = ij = (0, -zeta4), and right multiplication
/// by H on H^n makes each coordinate a pair of complex numbers.
class Quaternion {
 public:
  Quaternion() = default;
  Quaternion(Cyclotomic z1, Cyclotomic z2 = Cyclotomic()) : z1_(std::move(z1)), z2_(std::move(z2)) {}  // NOLINT
  Quaternion(long v) : z1_(v) {}  // NOLINT

  static Quaternion i() { return Quaternion(imag_unit()); }
  static Quaternion j() { return Quaternion(Cyclotomic(), Cyclotomic(1)); }
  static Quaternion k() { return Quaternion(Cyclotomic(), -imag_unit()); }

  const Cyclotomic& z1() const { return z1_; }
  const Cyclotomic& z2() const { return z2_; }

  bool is_zero() const { return z1_.is_zero() && z2_.is_zero(); }

  Quaternion conj() const { return Quaternion(z1_.conj(), -z2_); }
  /// conj(q) q = |z1|^2 + |z2|^2, always rational-real.
  Cyclotomic norm_sq() const { return abs2(z1_) + abs2(z2_); }
  Quaternion inverse() const;

  Quaternion operator-() const { return Quaternion(-z1_, -z2_); }
  Quaternion& operator+=(const Quaternion& r) {
    z1_ += r.z1_;
    z2_ += r.z2_;
    return *this;
  }
  Quaternion& operator-=(const Quaternion& r) {
    z1_ -= r.z1_;
    z2_ -= r.z2_;
    return *this;
  }
  Quaternion& operator*=(const Quaternion& r) { return *this = *this * r; }

  friend Quaternion operator+(Quaternion a, const Quaternion& b) { return a += b; }
  friend Quaternion operator-(Quaternion a, const Quaternion& b) { return a -= b; }
  /// (z1 + j z2)(w1 + j w2) = (z1 w1 - conj(z2) w2) + j (conj(z1) w2 + z2 w1).
  friend Quaternion operator*(const Quaternion& a, const Quaternion& b) {
    return Quaternion(a.z1_ * b.z1_ - a.z2_.conj() * b.z2_, a.z1_.conj() * b.z2_ + a.z2_ * b.z1_);
  }
  friend bool operator==(const Quaternion& a, const Quaternion& b) { return a.z1_ == b.z1_ && a.z2_ == b.z2_; }

  std::string str() const;

 private:
  Cyclotomic z1_;
  Cyclotomic z2_;
};

inline bool is_zero(const Quaternion& q) { return q.is_zero(); }
inline std::ostream& operator<<(std::ostream& os, const Quaternion& q) { return os << q.str(); }
inline Quaternion conj(const Quaternion& q) { return q.conj(); }

using QuatVector = std::vector<Quaternion>;

/// (x, y) = sum conj(x_p) y_p.
Quaternion hermitian_form(const QuatVector& x, const QuatVector& y);

struct SplitForm {
  Cyclotomic hermitian;   // z1 part of (x, y)
  Cyclotomic symplectic;  // z2 part of (x, y)
};

/// (x, y) = hermitian + j symplectic.
SplitForm split_form(const QuatVector& x, const QuatVector& y);

/// v j, coordinatewise.
QuatVector right_mul(const QuatVector& v, const Quaternion& q);

}  // namespace qzf
