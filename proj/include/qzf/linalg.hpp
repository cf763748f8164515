#pragma once

#include <Eigen/Core>
#include <utility>
#include <vector>

#include "qzf/cyclotomic.hpp"
#include "qzf/quaternion.hpp"
#include "qzf/rational.hpp"

namespace Eigen {

template <>
struct NumTraits<qzf::Quaternion> : GenericNumTraits<qzf::Quaternion> {
  using Real = qzf::Quaternion;
  using NonInteger = qzf::Quaternion;
  using Nested = qzf::Quaternion;
  using Literal = qzf::Quaternion;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 40,
    AddCost = 400,
    MulCost = 3200
  };
};

}  // namespace Eigen

namespace qzf {

template <typename K>
using Mat = Eigen::Matrix<K, Eigen::Dynamic, Eigen::Dynamic>;
template <typename K>
using Vec = Eigen::Matrix<K, Eigen::Dynamic, 1>;

using CycMatrix = Mat<Cyclotomic>;
using CycVector = Vec<Cyclotomic>;
using QuatMatrix = Mat<Quaternion>;
using RatMatrix = Mat<Rational>;

template <typename K>
inline K inverse_of(const K& a) {
  return K(1) / a;
}
template <>
inline Cyclotomic inverse_of(const Cyclotomic& a) {
  return a.inverse();
}
template <>
inline Quaternion inverse_of(const Quaternion& a) {
  return a.inverse();
}

template <typename K>
struct Echelon {
  Mat<K> reduced;
  std::vector<int> pivots;  // pivot column of each nonzero row
};

/// Reduced row echelon form by exact Gauss-Jordan elimination. Scalars act
/// on the left, so the routine is also valid over the quaternions.
/// With stop_after >= 0 the elimination halts once that many pivots exist.
template <typename K>
Echelon<K> row_echelon(Mat<K> a, int stop_after = -1) {
  Echelon<K> e;
  const Eigen::Index rows = a.rows(), cols = a.cols();
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index p = r;
    while (p < rows && is_zero(a(p, c))) ++p;
    if (p == rows) continue;
    if (p != r) a.row(p).swap(a.row(r));
    const K inv = inverse_of(a(r, c));
    for (Eigen::Index j = c; j < cols; ++j) a(r, j) = inv * a(r, j);
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (i == r || is_zero(a(i, c))) continue;
      const K f = a(i, c);
      for (Eigen::Index j = c; j < cols; ++j)
        if (!is_zero(a(r, j))) a(i, j) -= f * a(r, j);
    }
    e.pivots.push_back(static_cast<int>(c));
    ++r;
    if (stop_after >= 0 && r >= stop_after) break;
  }
  e.reduced = std::move(a);
  return e;
}

template <typename K>
int rank(const Mat<K>& a) {
  return static_cast<int>(row_echelon(a).pivots.size());
}

/// Rank, but stops counting at limit + 1.
template <typename K>
int rank_capped(const Mat<K>& a, int limit) {
  return static_cast<int>(row_echelon(a, limit + 1).pivots.size());
}

/// Columns form a basis of {v : a v = 0}.
template <typename K>
Mat<K> kernel(const Mat<K>& a) {
  const auto e = row_echelon(a);
  const Eigen::Index cols = a.cols();
  std::vector<bool> is_pivot(cols, false);
  for (int p : e.pivots) is_pivot[p] = true;
  const Eigen::Index nullity = cols - static_cast<Eigen::Index>(e.pivots.size());
  Mat<K> basis = Mat<K>::Constant(cols, nullity, K(0));
  Eigen::Index b = 0;
  for (Eigen::Index free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    basis(free, b) = K(1);
    for (size_t r = 0; r < e.pivots.size(); ++r) basis(e.pivots[r], b) = -e.reduced(r, free);
    ++b;
  }
  return basis;
}

/// Columns form a basis of span(u) ∩ span(v).
template <typename K>
Mat<K> intersection(const Mat<K>& u, const Mat<K>& v) {
  Mat<K> stacked(u.rows(), u.cols() + v.cols());
  stacked << u, -v;
  const Mat<K> ker = kernel(stacked);
  Mat<K> out = u * ker.topRows(u.cols());
  // drop dependent columns
  if (out.cols() == 0) return out;
  const auto e = row_echelon(Mat<K>(out.transpose()));
  Mat<K> basis(out.rows(), static_cast<Eigen::Index>(e.pivots.size()));
  for (size_t i = 0; i < e.pivots.size(); ++i) basis.col(i) = e.reduced.row(i).transpose();
  return basis;
}

template <typename K>
bool is_zero_matrix(const Mat<K>& a) {
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (!is_zero(a(i, j))) return false;
  return true;
}

/// Product with left factor kept on the left; required for quaternions.
QuatMatrix quat_mul(const QuatMatrix& a, const QuatMatrix& b);
QuatMatrix quat_adjoint(const QuatMatrix& a);
bool is_unitary(const QuatMatrix& a);

/// Each entry q = z1 + j z2 becomes [[z1, -conj z2], [z2, conj z1]].
CycMatrix complex_embedding(const QuatMatrix& a);

/// Quaternionic rank through division-ring elimination.
int quat_rank(const QuatMatrix& a);

/// Rank over C of the complex embedding, halved.
int quat_rank_via_embedding(const QuatMatrix& a);

CycMatrix identity_matrix(Eigen::Index n);

/// Determinant of a 2x2 matrix.
Cyclotomic det2(const CycMatrix& a);

}  // namespace qzf
