#pragma once

#include <Eigen/Core>
#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "qzf/cyclotomic.hpp"
#include "qzf/linalg.hpp"

namespace qzf {

using Mat2 = Eigen::Matrix<Cyclotomic, 2, 2>;

enum class Family { Cyclic, BinaryDihedral, Tetrahedral, Octahedral, Icosahedral };

struct GroupSpec {
  Family family = Family::Cyclic;
  int param = 1;  // l for cyclic, n for binary dihedral (order 4n)

  /// "cyclic:5", "bd:3", "bt", "bo", "bi".
  static GroupSpec parse(std::string_view text);
  std::string str() const;
  long order() const;
  /// lcm of the roots of unity appearing in the generators.
  int conductor() const;
  bool is_abelian() const { return family == Family::Cyclic; }
};

bool operator==(const GroupSpec& a, const GroupSpec& b);

/// The generating matrices exactly as printed, entries lifted to spec.conductor().
std::vector<Mat2> builtin_generators(const GroupSpec& spec);

/// Default cap on enumerated group elements.
inline constexpr std::size_t kDefaultGroupCap = 10000;

/// A finite subgroup of SL2 enumerated by breadth-first closure.
/// Element 0 is the identity; class 0 is {identity}.
class FiniteGroup {
 public:
  int order() const { return static_cast<int>(elements_.size()); }
  int conductor() const { return conductor_; }
  const Mat2& element(int i) const { return elements_[i]; }
  const std::vector<Mat2>& elements() const { return elements_; }
  int mul(int a, int b) const { return table_[static_cast<std::size_t>(a) * elements_.size() + b]; }
  int inv(int a) const { return inverse_[a]; }
  int conj_by(int g, int x) const { return mul(mul(g, x), inv(g)); }
  int element_order(int a) const { return orders_[a]; }
  int exponent() const;
  /// Index of a matrix, or -1.
  int find(const Mat2& m) const;

  /// Generators used for closure, and the BFS spanning tree (parent, generator).
  const std::vector<int>& generator_indices() const { return generators_; }
  int parent(int a) const { return parent_[a]; }
  int parent_generator(int a) const { return parent_gen_[a]; }

  int num_classes() const { return static_cast<int>(classes_.size()); }
  const std::vector<std::vector<int>>& classes() const { return classes_; }
  int class_of(int a) const { return class_of_[a]; }
  int class_size(int c) const { return static_cast<int>(classes_[c].size()); }
  int class_rep(int c) const { return classes_[c].front(); }

  bool is_abelian() const;

  friend FiniteGroup close(const std::vector<Mat2>& generators, std::size_t cap);

 private:
  int conductor_ = 1;
  std::vector<Mat2> elements_;
  std::vector<int> table_;
  std::vector<int> inverse_;
  std::vector<int> orders_;
  std::vector<int> generators_;
  std::vector<int> parent_;
  std::vector<int> parent_gen_;
  std::vector<std::vector<int>> classes_;
  std::vector<int> class_of_;
  std::map<std::vector<Rational>, int> index_;
};

/// Breadth-first closure; throws CapExceeded past cap elements.
FiniteGroup close(const std::vector<Mat2>& generators, std::size_t cap = kDefaultGroupCap);

FiniteGroup make_group(const GroupSpec& spec, std::size_t cap = kDefaultGroupCap);

// ---------------------------------------------------------------------------
// Subgroups

struct Subgroup {
  std::string spec;
  std::vector<int> elements;  // sorted indices into the ambient group
  std::vector<bool> member;
  int order() const { return static_cast<int>(elements.size()); }
  bool contains(int g) const { return member[g]; }
};

/// Closure of the given elements inside G.
Subgroup generated_subgroup(const FiniteGroup& g, const std::vector<int>& gens, std::string name = "");
Subgroup commutator_subgroup(const FiniteGroup& g);
bool is_normal(const FiniteGroup& g, const Subgroup& h);

/// "whole", "comm", "cyc2" (binary dihedral only), "gens:i,j,..." with
/// BFS element indices. The result is checked to be normal with abelian quotient.
Subgroup resolve_subgroup(const FiniteGroup& g, const GroupSpec& spec, std::string_view text);

// ---------------------------------------------------------------------------
// Characters

/// Values per conjugacy class.
using ClassFunction = std::vector<Cyclotomic>;

struct CharacterTable {
  int conductor = 1;  // all values live in Q(zeta_conductor)
  std::vector<ClassFunction> chars;
  int size() const { return static_cast<int>(chars.size()); }
  Cyclotomic degree(int i) const { return chars[i][0]; }
  long degree_int(int i) const;
  bool is_linear(int i) const { return degree_int(i) == 1; }
};

/// lcm(group conductor, exponent).
int character_conductor(const FiniteGroup& g);

Cyclotomic inner_product(const FiniteGroup& g, const ClassFunction& a, const ClassFunction& b);
ClassFunction product(const ClassFunction& a, const ClassFunction& b);
ClassFunction defining_character(const FiniteGroup& g, int conductor);
ClassFunction trivial_character(const FiniteGroup& g, int conductor);
/// Value of a class function at an element.
inline const Cyclotomic& value_at(const FiniteGroup& g, const ClassFunction& f, int element) {
  return f[g.class_of(element)];
}

/// Linear characters through the abelianization.
std::vector<ClassFunction> linear_characters(const FiniteGroup& g, int conductor);

/// Tensor sieve: starts from linear characters and the defining character,
/// repeatedly decomposes chi * chi_V and keeps norm-one remainders, closing
/// under linear twists and Galois conjugation. Throws if it stalls.
CharacterTable sieve_character_table(const FiniteGroup& g);

/// Character table by the family method (closed forms for cyclic and binary
/// dihedral groups, the sieve for the exceptional groups), validated.
CharacterTable character_table(const FiniteGroup& g, const GroupSpec& spec);

struct TableValidation {
  bool row_orthonormal = false;
  bool column_orthogonal = false;
  bool degree_sum = false;
  bool tensor_integral = false;
  bool ok() const { return row_orthonormal && column_orthogonal && degree_sum && tensor_integral; }
};
TableValidation validate_table(const FiniteGroup& g, const CharacterTable& t);

/// True when both tables list the same characters in some order.
bool same_characters(const CharacterTable& a, const CharacterTable& b);

bool kernel_contains(const FiniteGroup& g, const ClassFunction& chi, const Subgroup& d);
/// chi|_D == psi|_D.
bool same_restriction(const FiniteGroup& g, const ClassFunction& chi, const ClassFunction& psi, const Subgroup& d);

}  // namespace qzf
