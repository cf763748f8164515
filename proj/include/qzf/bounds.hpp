#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qzf/groups.hpp"
#include "qzf/mckay.hpp"
#include "qzf/wreath.hpp"

namespace qzf {

inline constexpr std::size_t kDefaultOracleCap = 100000;

enum class Eta { Triv, Det };
std::string to_string(Eta e);

/// (chi, eta)-semi-invariants of W_n(Gamma, Delta) on L^(x n) (x) det,
/// where L is the Gamma-module with class chL.
struct SemiInvariantQuery {
  const GammaContext* ctx = nullptr;
  const Subgroup* delta = nullptr;
  int n = 1;
  GVector chL;
  int chi = 0;  // vertex of a linear character of Gamma
  Eta eta = Eta::Det;
};

/// Sum over linear psi with psi|Delta = chi|Delta of C(d_psi, n) (triv) or C(d_psi + n - 1, n) (det).
Integer semiinv_dim_formula(const SemiInvariantQuery& q);
/// Same multiplicity as a character average over the whole wreath group.
Integer wreath_character_oracle(const SemiInvariantQuery& q, std::size_t cap = kDefaultOracleCap);

enum class TableCase { WholeNontrivial, WholeTrivial, Index2Nontrivial, Index2Trivial, E6Index3, DIndex4 };
std::string to_string(TableCase c);
/// Cases listed for each eta: all six for det, the two nontrivial-restriction rows for triv.
std::vector<TableCase> table_cases(Eta eta);

/// A (Gamma, Delta) instance of a table row.
struct TableInstance {
  std::string gamma;
  std::string delta;
  std::vector<int> chis;             // qualifying characters
  std::vector<Integer> dims;         // formula value per chi
  std::vector<Integer> oracle;       // oracle value per chi; empty when |W| > cap
  bool oracle_ok = true;
};

struct TableRow {
  TableCase c = TableCase::WholeNontrivial;
  Eta eta = Eta::Det;
  int n = 2;
  Integer dimension;                 // common value of every instance
  std::string closed_form;
  Integer closed_value;              // the closed form evaluated directly
  std::vector<TableInstance> instances;
  bool constant = false;             // every instance and chi gives the same value
  bool matches = false;              // constant and equal to closed_value
  int oracle_checked = 0;
  bool oracle_ok = true;
  bool ok() const { return matches && oracle_ok; }
};

/// Printed closed form and its value.
std::string closed_form_text(TableCase c, Eta eta);
Integer closed_form_value(TableCase c, Eta eta, int n);

TableRow catalan_table(TableCase c, Eta eta, int n, std::size_t oracle_cap = kDefaultOracleCap);

struct LowerBoundReport {
  std::string gamma;
  std::string delta;
  int n = 0;
  long g = 0;                        // (n-1)|Gamma| + 2(|Delta|-1)
  std::optional<long> g_enumerated;  // 2N/n from the reflections when |W| <= cap
  Integer bound;                     // (g+1)^n
  LCharacter L;
  bool dim_matches = false;          // dim L = g + 1 on every available path
  bool alpha_condition = false;      // sum_{i != 0} k_i n_i = 2|Delta| - 1 (Delta != Gamma)
  Integer fiber_invariants;          // dim of W-invariants in L^(x n) (x) det
  std::vector<std::pair<int, Integer>> det_dims;  // (chi, dim of (chi, det)-semi-invariants)
  bool ok() const { return dim_matches && L.dimension_bound && alpha_condition && fiber_invariants == 1; }
};

LowerBoundReport lower_bound_report(const GroupSpec& spec, const std::string& delta, int n,
                                    std::size_t cap = kDefaultWreathCap);

struct DeltaBounds {
  long order = 0;
  long degree = 0;
  long upper = 0;  // C(|Gamma| + 1, 2)
  bool ok = false;
};

/// |Gamma| <= zero fiber degree <= C(|Gamma| + 1, 2) for a rank-one group.
DeltaBounds delta_bounds_check(const GroupSpec& spec);

}  // namespace qzf
