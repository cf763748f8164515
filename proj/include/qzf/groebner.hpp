#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "qzf/linalg.hpp"
#include "qzf/polynomial.hpp"

namespace qzf {

template <typename K>
struct GroebnerBasis {
  std::vector<Poly<K>> basis;     // reduced, monic, decreasing leading monomial
  std::vector<Monomial> leading;  // leading monomials of basis
  long standard_monomials = -1;   // dim of the quotient, -1 when infinite
};

/// Monomials outside the ideal generated by `leading`. Empty when the count is infinite.
std::vector<Monomial> standard_monomials(const std::vector<Monomial>& leading);
/// -1 when infinite.
long count_standard_monomials(const std::vector<Monomial>& leading);
/// Number of standard monomials in each degree.
std::vector<long> standard_monomials_by_degree(const std::vector<Monomial>& leading);
/// Some element of `leading` divides m.
bool in_monomial_ideal(const Monomial& m, const std::vector<Monomial>& leading);

template <typename K>
Poly<K> s_polynomial(const Poly<K>& f, const Poly<K>& g) {
  const Monomial l = lcm(f.leading_monomial(), g.leading_monomial());
  return f.times_term(inverse_of(f.leading_coefficient()), l / f.leading_monomial()) -
         g.times_term(inverse_of(g.leading_coefficient()), l / g.leading_monomial());
}

/// Fully reduced remainder of f modulo g (every term, not just the leading one).
template <typename K>
Poly<K> normal_form(Poly<K> f, const std::vector<Poly<K>>& g) {
  Poly<K> r;
  while (!f.is_zero()) {
    const Monomial lm = f.leading_monomial();
    const K lc = f.leading_coefficient();
    bool reduced = false;
    for (const auto& h : g) {
      if (h.is_zero() || !h.leading_monomial().divides(lm)) continue;
      f -= h.times_term(lc * inverse_of(h.leading_coefficient()), lm / h.leading_monomial());
      reduced = true;
      break;
    }
    if (!reduced) {
      r.add_term(lm, lc);
      f.add_term(lm, -lc);
    }
  }
  return r;
}

namespace detail {

struct Pair {
  int i, j;
  Monomial lcm;
};

inline bool coprime(const Monomial& a, const Monomial& b) { return (a.a == 0 || b.a == 0) && (a.b == 0 || b.b == 0); }

// Gebauer-Moeller update for inserting polynomial index h.
template <typename K>
void gm_update(const std::vector<Poly<K>>& all, std::vector<int>& g, std::vector<Pair>& b, int h) {
  const Monomial lh = all[h].leading_monomial();
  std::vector<Pair> c, d;
  for (int i : g) c.push_back({h, i, lcm(lh, all[i].leading_monomial())});
  while (!c.empty()) {
    Pair p = c.back();
    c.pop_back();
    const bool cop = coprime(lh, all[p.j].leading_monomial());
    bool keep = cop;
    if (!keep) {
      keep = true;
      for (const auto& q : c)
        if (q.lcm.divides(p.lcm)) keep = false;
      for (const auto& q : d)
        if (q.lcm.divides(p.lcm)) keep = false;
    }
    if (keep) d.push_back(p);
  }
  std::vector<Pair> e;
  for (const auto& p : d)
    if (!coprime(lh, all[p.j].leading_monomial())) e.push_back(p);
  std::vector<Pair> kept;
  for (const auto& p : b) {
    const bool drop = lh.divides(p.lcm) && !(lcm(all[p.i].leading_monomial(), lh) == p.lcm) &&
                      !(lcm(lh, all[p.j].leading_monomial()) == p.lcm);
    if (!drop) kept.push_back(p);
  }
  kept.insert(kept.end(), e.begin(), e.end());
  b = std::move(kept);
  std::vector<int> ng;
  for (int i : g)
    if (!lh.divides(all[i].leading_monomial())) ng.push_back(i);
  ng.push_back(h);
  g = std::move(ng);
}

}  // namespace detail

/// Reduced Groebner basis under lex (x > y), Buchberger with the Gebauer-Moeller criteria.
template <typename K>
GroebnerBasis<K> buchberger(const std::vector<Poly<K>>& gens) {
  std::vector<Poly<K>> all;
  std::vector<int> g;
  std::vector<detail::Pair> b;
  for (const auto& f : gens) {
    if (f.is_zero()) continue;
    all.push_back(f.monic());
    detail::gm_update(all, g, b, static_cast<int>(all.size()) - 1);
  }
  while (!b.empty()) {
    // normal selection strategy: smallest lcm
    auto it = std::min_element(b.begin(), b.end(), [](const detail::Pair& p, const detail::Pair& q) {
      if (p.lcm.degree() != q.lcm.degree()) return p.lcm.degree() < q.lcm.degree();
      return lex_greater(q.lcm, p.lcm);
    });
    const detail::Pair p = *it;
    b.erase(it);
    std::vector<Poly<K>> current;
    for (int i : g) current.push_back(all[i]);
    Poly<K> h = normal_form(s_polynomial(all[p.i], all[p.j]), current);
    if (h.is_zero()) continue;
    all.push_back(h.monic());
    detail::gm_update(all, g, b, static_cast<int>(all.size()) - 1);
  }

  // minimal, then reduced
  std::vector<Poly<K>> minimal;
  for (int i : g) {
    bool redundant = false;
    for (int j : g)
      if (j != i && all[j].leading_monomial().divides(all[i].leading_monomial()) &&
          (!(all[j].leading_monomial() == all[i].leading_monomial()) || j < i))
        redundant = true;
    if (!redundant) minimal.push_back(all[i]);
  }
  GroebnerBasis<K> out;
  for (size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Poly<K>> others;
    for (size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    const Monomial lm = minimal[i].leading_monomial();
    Poly<K> tail = minimal[i];
    tail.add_term(lm, -minimal[i].leading_coefficient());
    Poly<K> reduced = normal_form(tail, others);
    reduced.add_term(lm, K(1));
    out.basis.push_back(reduced.monic());
  }
  std::sort(out.basis.begin(), out.basis.end(), [](const Poly<K>& a, const Poly<K>& c) {
    return lex_greater(a.leading_monomial(), c.leading_monomial());
  });
  for (const auto& f : out.basis) out.leading.push_back(f.leading_monomial());
  out.standard_monomials = count_standard_monomials(out.leading);
  return out;
}

/// Every S-polynomial of g reduces to zero modulo g.
template <typename K>
bool s_pairs_reduce_to_zero(const std::vector<Poly<K>>& g) {
  for (size_t i = 0; i < g.size(); ++i)
    for (size_t j = i + 1; j < g.size(); ++j)
      if (!normal_form(s_polynomial(g[i], g[j]), g).is_zero()) return false;
  return true;
}

/// No leading monomial divides a term of another basis element, and all are monic.
template <typename K>
bool is_reduced(const std::vector<Poly<K>>& g) {
  for (size_t i = 0; i < g.size(); ++i) {
    if (!(g[i].leading_coefficient() == K(1))) return false;
    for (size_t j = 0; j < g.size(); ++j) {
      if (i == j) continue;
      for (const auto& [m, c] : g[j].terms())
        if (g[i].leading_monomial().divides(m)) return false;
    }
  }
  return true;
}

/// Cofactors c_i with sum c_i gens_i = target, found by exact linear algebra in
/// each homogeneous degree of target. Requires homogeneous generators.
template <typename K>
std::optional<std::vector<Poly<K>>> homogeneous_cofactors(const Poly<K>& target, const std::vector<Poly<K>>& gens) {
  for (const auto& f : gens)
    if (!f.is_homogeneous() || f.is_zero()) throw ArithmeticError("homogeneous_cofactors: generators must be homogeneous");
  std::vector<Poly<K>> cof(gens.size());
  std::map<int, Poly<K>> parts;
  for (const auto& [m, c] : target.terms()) parts[m.degree()].add_term(m, c);
  for (const auto& [d, part] : parts) {
    std::vector<std::pair<int, int>> unknowns;  // (generator, x-exponent of multiplier)
    for (size_t i = 0; i < gens.size(); ++i) {
      const int e = d - gens[i].degree();
      for (int a = 0; a <= e; ++a) unknowns.emplace_back(static_cast<int>(i), a);
    }
    const Eigen::Index rows = d + 1, cols = static_cast<Eigen::Index>(unknowns.size());
    Mat<K> aug = Mat<K>::Constant(rows, cols + 1, K(0));
    for (Eigen::Index u = 0; u < cols; ++u) {
      const auto [i, a] = unknowns[u];
      const Monomial mult{a, d - gens[i].degree() - a};
      for (const auto& [m, c] : gens[i].terms()) aug((m * mult).a, u) = c;
    }
    for (const auto& [m, c] : part.terms()) aug(m.a, cols) = c;
    const auto e = row_echelon(aug);
    if (!e.pivots.empty() && e.pivots.back() == cols) return std::nullopt;
    for (size_t r = 0; r < e.pivots.size(); ++r) {
      const auto [i, a] = unknowns[e.pivots[r]];
      cof[i].add_term(Monomial{a, d - gens[i].degree() - a}, e.reduced(r, cols));
    }
  }
  return cof;
}

}  // namespace qzf
