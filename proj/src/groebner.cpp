#include "qzf/groebner.hpp"

namespace qzf {

bool in_monomial_ideal(const Monomial& m, const std::vector<Monomial>& leading) {
  for (const auto& l : leading)
    if (l.divides(m)) return true;
  return false;
}

namespace {

// Exponents of the pure powers x^X and y^Y, or -1.
std::pair<int, int> box(const std::vector<Monomial>& leading) {
  int x = -1, y = -1;
  for (const auto& l : leading) {
    if (l.b == 0 && (x < 0 || l.a < x)) x = l.a;
    if (l.a == 0 && (y < 0 || l.b < y)) y = l.b;
  }
  return {x, y};
}

}  // namespace

std::vector<Monomial> standard_monomials(const std::vector<Monomial>& leading) {
  const auto [bx, by] = box(leading);
  std::vector<Monomial> out;
  if (bx < 0 || by < 0) return out;
  for (int a = 0; a < bx; ++a)
    for (int b = 0; b < by; ++b)
      if (!in_monomial_ideal({a, b}, leading)) out.push_back({a, b});
  return out;
}

long count_standard_monomials(const std::vector<Monomial>& leading) {
  const auto [bx, by] = box(leading);
  if (bx < 0 || by < 0) return -1;
  return static_cast<long>(standard_monomials(leading).size());
}

std::vector<long> standard_monomials_by_degree(const std::vector<Monomial>& leading) {
  std::vector<long> out;
  for (const auto& m : standard_monomials(leading)) {
    if (static_cast<int>(out.size()) <= m.degree()) out.resize(m.degree() + 1, 0);
    ++out[m.degree()];
  }
  return out;
}

}  // namespace qzf
