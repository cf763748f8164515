#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "qzf/groups.hpp"
#include "qzf/linalg.hpp"
#include "qzf/quaternion.hpp"

namespace qzf {

inline constexpr std::size_t kDefaultWreathCap = 200000;

/// Element of W_n(Gamma, Delta): the monomial matrix with entry
/// gammas[perm[q]] in row perm[q], column q.
struct MonomialElement {
  std::vector<int> perm;
  std::vector<int> gammas;  // indices into Gamma
};

/// The group W_n(Gamma, Delta) acting on H^n.
class WreathGroup {
 public:
  WreathGroup(const FiniteGroup& gamma, Subgroup delta, int n);

  const FiniteGroup& gamma() const { return *gamma_; }
  const Subgroup& delta() const { return delta_; }
  int n() const { return n_; }
  /// |Gamma|^(n-1) |Delta| n!
  Integer order() const;

  bool contains(const MonomialElement& w) const;
  MonomialElement multiply(const MonomialElement& a, const MonomialElement& b) const;
  MonomialElement identity() const;
  int element_order(const MonomialElement& w) const;

  /// Quaternion attached to an element of Gamma.
  const Quaternion& quaternion(int g) const { return quats_[g]; }
  QuatMatrix quat_matrix(const MonomialElement& w) const;
  CycMatrix complex_matrix(const MonomialElement& w) const;

  /// Calls f on every element; throws CapExceeded when order() > cap.
  void for_each(const std::function<void(const MonomialElement&)>& f, std::size_t cap = kDefaultWreathCap) const;

 private:
  const FiniteGroup* gamma_;
  Subgroup delta_;
  int n_;
  std::vector<Quaternion> quats_;
};

enum class ReflectionType { A, B };  // (a) conjugate of a transposition, (b) diagonal

struct Reflection {
  MonomialElement element;
  ReflectionType type = ReflectionType::B;
  int order = 2;
};

/// Complex rank of (w - 1) on C^(2n), stopping once it exceeds limit.
/// Computed per permutation cycle and memoised on the cyclic gamma word.
class FixRankOracle {
 public:
  explicit FixRankOracle(const WreathGroup& w) : w_(&w) {}
  int rank(const MonomialElement& e, int limit);

 private:
  const WreathGroup* w_;
  std::map<std::vector<int>, int> cache_;
};

/// Every element whose fix space has quaternionic codimension 1.
std::vector<Reflection> reflections(const WreathGroup& w, std::size_t cap = kDefaultWreathCap);

/// True when the reflection has the shape gamma^(p) (pq) (gamma^(p))^-1 (type a)
/// or gamma^(p) with gamma in Delta (type b).
bool has_structural_shape(const WreathGroup& w, const Reflection& r);

struct Hyperplane {
  QuatVector alpha;     // normal vector, first nonzero coordinate 1
  std::string key;
  int stabilizer = 1;   // |W_H|, identity included
};

/// alpha for the reflecting hyperplane of r: a nonzero column of r - 1, right-normalised.
QuatVector root_vector(const WreathGroup& w, const MonomialElement& r);
/// Entries are printed at the given conductor so that equal values give equal keys.
std::string canonical_key(const QuatVector& alpha, int conductor);

/// Distinct fix spaces, sorted by key.
std::vector<Hyperplane> hyperplanes(const WreathGroup& w, const std::vector<Reflection>& refl);

/// 2n x 2n complex rows (two per alpha) whose kernel is the intersection of the alpha-perps.
CycMatrix perp_equations(const std::vector<const QuatVector*>& alphas);
/// Canonical text for the row space of a matrix (reduced echelon form).
std::string row_space_key(const CycMatrix& rows, int conductor);

struct NumerologyReport {
  std::string gamma;
  std::string delta;
  int n = 0;
  Integer order;
  long N = 0;
  long Nstar = 0;
  long type_a = 0;
  long type_b = 0;
  Rational g, h, k;
  bool g_integral = false, h_integral = false, k_integral = false;
  long N_formula = 0;
  long g_formula = 0;
  bool N_matches = false;
  bool g_matches = false;
  bool shapes_ok = false;           // each reflection has its structural type shape
  bool g_plus_k = false;            // g + k = 2h
  bool ordering = false;            // g >= h >= k
  bool all_order_two = false;
  bool equalities_iff_order_two = false;
  bool irreducible = false;         // certified by the roots (see below)
};

/// N from the closed form C(n,2)|Gamma| + n(|Delta|-1).
long reflection_count_formula(long gamma_order, long delta_order, int n);
/// (n-1)|Gamma| + 2(|Delta|-1).
long g_formula(long gamma_order, long delta_order, int n);

/// The alphas span V and their non-orthogonality graph is connected; this
/// forces V to be an irreducible H-representation.
bool roots_certify_irreducible(const std::vector<Hyperplane>& hs, int n);

NumerologyReport numerology(const WreathGroup& w, const std::vector<Reflection>& refl,
                            const std::vector<Hyperplane>& hs);
NumerologyReport numerology(const WreathGroup& w, std::size_t cap = kDefaultWreathCap);

struct AppendixReport {
  NumerologyReport numbers;
  Cyclotomic trace_sum;           // sum over R of tr_C(1 - r)
  Rational stabilizer_sum;        // sum over A of 2|W_H|
  bool trace = false;             // both equal 2(N + N*)
  bool f_operator = false;        // f(e_p) = (k/2) e_p for every p
  bool pairing_sum = false;       // 2 sum_K |(a_K,a_H)|^2 / (|a_K|^2 |a_H|^2) = k for every H
  bool k_identity = false;        // |A^H| = N* + 1 - k for every H
  std::vector<long> intersections;  // |A^H| per hyperplane
  bool ok() const { return trace && f_operator && pairing_sum && k_identity; }
};

AppendixReport appendix_checks(const WreathGroup& w, std::size_t cap = kDefaultWreathCap);

std::string to_string(ReflectionType t);

}  // namespace qzf
