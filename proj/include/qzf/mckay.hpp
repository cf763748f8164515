#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <string>
#include <vector>

#include "qzf/groups.hpp"

namespace qzf {

using IntMatrix = Eigen::Matrix<long, Eigen::Dynamic, Eigen::Dynamic>;
/// Integer vector indexed by the McKay vertices (characters, roots, delta).
using GVector = Eigen::Matrix<long, Eigen::Dynamic, 1>;
/// Rational parameter c indexed by the McKay vertices.
using ParamVector = std::vector<Rational>;

enum class AffineType { A, D, E6, E7, E8 };

struct McKayGraph {
  IntMatrix edges;  // m_ij = <chi_i chi_V, chi_j>
  GVector dims;     // delta
  AffineType type = AffineType::A;
  int rank = 0;     // finite rank: l-1 for A, n+2 for D, 6/7/8 for E
  int size() const { return static_cast<int>(dims.size()); }
  /// "A_4^(1)", "D_5^(1)", "E_6^(1)".
  std::string type_name() const;
};

/// Multiplicities, delta and the affine type. Vertex i is character i of the table.
McKayGraph mckay_graph(const FiniteGroup& g, const CharacterTable& t);

struct RootSystem {
  IntMatrix cartan;                 // affine Cartan matrix 2 Id - M
  GVector delta;
  GVector phi;                      // delta - alpha_0
  std::vector<GVector> positive;    // finite positive roots, coefficient 0 at vertex 0
  int size() const { return static_cast<int>(delta.size()); }
};

/// (a, b) under the affine Cartan form.
long pairing(const RootSystem& r, const GVector& a, const GVector& b);
bool is_finite_root(const RootSystem& r, const GVector& v);
/// a <= b coefficientwise.
bool dominated(const GVector& a, const GVector& b);
bool lex_less(const GVector& a, const GVector& b);

/// Rejects A_0 and checks that vertex 0 is extending and phi is the highest root.
RootSystem root_context(const McKayGraph& graph);

Rational dot(const GVector& alpha, const ParamVector& c);

/// Minimal positive real roots orthogonal to c, coefficientwise order. Throws if c.delta = 0.
std::vector<GVector> sigma_c(const RootSystem& r, const ParamVector& c);

/// Same set by brute force over n delta + beta with |n| <= bound.
std::vector<GVector> sigma_c_bruteforce(const RootSystem& r, const ParamVector& c, long bound);

/// c with c.alpha = 0, c.delta = 1 and c.gamma non-integral for every finite
/// root gamma other than the finite part of alpha (and its negative).
ParamVector generic_on_hyperplane(const RootSystem& r, const GVector& alpha, std::uint64_t seed = 1);

/// Positive real root n delta + beta, decomposed. Returns false if v is not a positive real root.
bool split_real_root(const RootSystem& r, const GVector& v, long& n, GVector& beta);

struct GammaContext {
  GroupSpec spec;
  FiniteGroup group;
  CharacterTable table;
  McKayGraph graph;
  RootSystem roots;
};

GammaContext make_context(const GroupSpec& spec);

/// Vertices whose character is linear and trivial on delta_subgroup.
std::vector<int> quotient_vertices(const GammaContext& ctx, const Subgroup& d);

struct AlphaChoice {
  GVector alpha;
  bool whole = false;              // Delta = Gamma: alpha = phi and ch(L) = n delta + phi
  std::vector<int> quotient_vertices;
  int maximal_candidates = 0;      // maximal roots with exactly one unit on the quotient vertices
  int satisfying_condition = 0;    // of those, how many satisfy sum_{i != 0} k_i n_i = 2|Delta| - 1
  long weighted_sum = 0;           // sum_{i != 0} k_i n_i for the chosen alpha
};

AlphaChoice admissible_alpha(const GammaContext& ctx, const Subgroup& d);

struct LCharacter {
  GVector ch;
  long dim = 0;        // sum ch_i n_i
  long g = 0;          // (n-1)|Gamma| + 2(|Delta|-1)
  bool dim_matches = false;
  bool dimension_bound = false;  // ch_chi <= n on quotient vertices, equality exactly once
  int equality_vertex = -1;
  AlphaChoice alpha;
};

LCharacter character_of_L(const GammaContext& ctx, const Subgroup& d, int n);

struct DotOptions {
  const Subgroup* delta = nullptr;
  const GVector* alpha = nullptr;
};
std::string to_dot(const GammaContext& ctx, const DotOptions& opts = {});

std::string to_string(const GVector& v);

}  // namespace qzf
