#include "qzf/quaternion.hpp"

#include "qzf/error.hpp"
#include "qzf/linalg.hpp"

namespace qzf {

Quaternion Quaternion::inverse() const {
  if (is_zero()) throw ArithmeticError("inverse of zero quaternion");
  Cyclotomic s = norm_sq().inverse();
  Quaternion c = conj();
  return Quaternion(c.z1_ * s, c.z2_ * s);
}

std::string Quaternion::str() const { return "(" + z1_.str() + ")+j*(" + z2_.str() + ")"; }

Quaternion hermitian_form(const QuatVector& x, const QuatVector& y) {
  if (x.size() != y.size()) throw ArithmeticError("hermitian_form: length mismatch");
  Quaternion s;
  for (size_t p = 0; p < x.size(); ++p) s += x[p].conj() * y[p];
  return s;
}

SplitForm split_form(const QuatVector& x, const QuatVector& y) {
  Quaternion q = hermitian_form(x, y);
  return {q.z1(), q.z2()};
}

QuatVector right_mul(const QuatVector& v, const Quaternion& q) {
  QuatVector out;
  out.reserve(v.size());
  for (const auto& e : v) out.push_back(e * q);
  return out;
}

QuatMatrix quat_mul(const QuatMatrix& a, const QuatMatrix& b) {
  if (a.cols() != b.rows()) throw ArithmeticError("quat_mul: shape mismatch");
  QuatMatrix out(a.rows(), b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < b.cols(); ++j) {
      Quaternion s;
      for (Eigen::Index k = 0; k < a.cols(); ++k)
        if (!a(i, k).is_zero() && !b(k, j).is_zero()) s += a(i, k) * b(k, j);
      out(i, j) = s;
    }
  return out;
}

QuatMatrix quat_adjoint(const QuatMatrix& a) {
  QuatMatrix out(a.cols(), a.rows());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) out(j, i) = a(i, j).conj();
  return out;
}

bool is_unitary(const QuatMatrix& a) {
  if (a.rows() != a.cols()) return false;
  QuatMatrix p = quat_mul(quat_adjoint(a), a);
  for (Eigen::Index i = 0; i < p.rows(); ++i)
    for (Eigen::Index j = 0; j < p.cols(); ++j)
      if (!(p(i, j) == Quaternion(i == j ? 1 : 0))) return false;
  return true;
}

CycMatrix complex_embedding(const QuatMatrix& a) {
  CycMatrix out(2 * a.rows(), 2 * a.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      const auto& q = a(i, j);
      out(2 * i, 2 * j) = q.z1();
      out(2 * i, 2 * j + 1) = -q.z2().conj();
      out(2 * i + 1, 2 * j) = q.z2();
      out(2 * i + 1, 2 * j + 1) = q.z1().conj();
    }
  return out;
}

int quat_rank(const QuatMatrix& a) { return rank(a); }

int quat_rank_via_embedding(const QuatMatrix& a) {
  int r = rank(complex_embedding(a));
  verify(r % 2 == 0, "complex rank of a quaternionic matrix must be even");
  return r / 2;
}

CycMatrix identity_matrix(Eigen::Index n) {
  CycMatrix m = CycMatrix::Constant(n, n, Cyclotomic(0));
  for (Eigen::Index i = 0; i < n; ++i) m(i, i) = Cyclotomic(1);
  return m;
}

Cyclotomic det2(const CycMatrix& a) { return a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0); }

}  // namespace qzf
