#pragma once

#include <string>
#include <vector>

#include "qzf/groebner.hpp"
#include "qzf/groups.hpp"
#include "qzf/polynomial.hpp"

namespace qzf {

/// (g p)(v) = p(g^-1 v): x -> (g^-1)_11 x + (g^-1)_12 y, y -> (g^-1)_21 x + (g^-1)_22 y.
/// For w = diag(z, 1/z) this gives w x = x / z and w y = z y.
Polynomial act(const Mat2& g, const Polynomial& p);

/// Average of g p over the group.
Polynomial reynolds(const FiniteGroup& g, const Polynomial& p);

/// g p = p for every closure generator.
bool is_invariant(const FiniteGroup& g, const Polynomial& p);
/// g p = c p for every generator; the scalars are returned.
bool is_semi_invariant(const FiniteGroup& g, const Polynomial& p, std::vector<Cyclotomic>* scalars = nullptr);

/// Matrix of g on degree-d forms in the basis x^d, x^(d-1) y, ..., y^d (column k = image of x^(d-k) y^k).
CycMatrix sym_power_matrix(const Mat2& g, int d);

/// Basis of degree-d invariants: common fixed space of the generators on degree-d forms.
std::vector<Polynomial> invariant_basis(const FiniteGroup& g, int d);
int invariant_dim(const FiniteGroup& g, int d);
/// Rank of the Reynolds images of the degree-d monomials (direct averaging; slower).
int invariant_dim_by_averaging(const FiniteGroup& g, int d);

/// Coefficients of (1/|G|) sum_g 1/det(1 - t g) up to t^d_max, from the class traces.
std::vector<long> molien_coeffs(const FiniteGroup& g, int d_max);

struct NamedPolynomial {
  std::string name;
  Polynomial poly;
};

/// x^l, xy, y^l; f1, f2, f3 (g1, g2, g3 for odd binary dihedral); f1, f2, f3 for the exceptional groups.
std::vector<NamedPolynomial> fundamental_invariants(const GroupSpec& spec);
std::vector<Polynomial> polys(const std::vector<NamedPolynomial>& named);

/// Leading monomials printed for the exceptional groups (empty otherwise).
std::vector<Monomial> printed_leading_terms(const GroupSpec& spec);

struct ZeroFiber {
  GroupSpec spec;
  std::vector<NamedPolynomial> invariants;
  GroebnerBasis<Cyclotomic> gb;
  long degree = -1;
  std::vector<long> hilbert;        // standard monomials per degree
  bool invariants_ok = false;       // every generator is invariant
  bool low_degree_invariants_in_ideal = false;  // all invariants up to max deg f_i reduce to 0
  bool s_pairs_ok = false;
  bool reduced_ok = false;
  bool printed_leading_contained = true;
  bool equals_formula = false;      // degree = 2|Gamma| - 1
};

ZeroFiber zero_fiber(const GroupSpec& spec);
long zero_fiber_degree(const GroupSpec& spec);

enum class IdentityStatus { Verified, Corrected, Failed };
std::string to_string(IdentityStatus s);

struct IdentityEntry {
  std::string name;
  std::string printed;               // the displayed statement
  IdentityStatus status = IdentityStatus::Failed;
  Polynomial printed_value;          // right-hand side as printed
  Polynomial recomputed;             // exact value of the printed left-hand side
  bool in_ideal = false;             // the element claimed to lie in I does
  Polynomial certified;              // the element certified in I
  std::vector<Polynomial> witness;   // cofactors on the fundamental invariants
  std::string note;
};

/// Re-expands every displayed identity for the group (binary dihedral for the given n).
std::vector<IdentityEntry> verify_identity_ledger(const GroupSpec& spec);

}  // namespace qzf
