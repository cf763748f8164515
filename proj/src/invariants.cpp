#include "qzf/invariants.hpp"

#include <functional>
#include <set>

#include "qzf/error.hpp"

namespace qzf {

namespace {

Mat2 inverse2(const Mat2& g) {
  Mat2 inv;
  inv(0, 0) = g(1, 1);
  inv(0, 1) = -g(0, 1);
  inv(1, 0) = -g(1, 0);
  inv(1, 1) = g(0, 0);
  return inv;  // det g = 1
}

Polynomial linear(const Cyclotomic& a, const Cyclotomic& b) {
  return Polynomial::monomial(a, 1, 0) + Polynomial::monomial(b, 0, 1);
}

Polynomial P(std::string_view text) { return parse_polynomial(text); }

}  // namespace

Polynomial act(const Mat2& g, const Polynomial& p) {
  const Mat2 gi = inverse2(g);
  return substitute(p, linear(gi(0, 0), gi(0, 1)), linear(gi(1, 0), gi(1, 1)));
}

Polynomial reynolds(const FiniteGroup& g, const Polynomial& p) {
  Polynomial sum;
  for (const auto& e : g.elements()) sum += act(e, p);
  return sum.scaled(Cyclotomic(ratio(1, g.order())));
}

bool is_invariant(const FiniteGroup& g, const Polynomial& p) {
  for (int i : g.generator_indices())
    if (!(act(g.element(i), p) == p)) return false;
  return true;
}

bool is_semi_invariant(const FiniteGroup& g, const Polynomial& p, std::vector<Cyclotomic>* scalars) {
  if (p.is_zero()) return false;
  if (scalars) scalars->clear();
  for (int i : g.generator_indices()) {
    const Polynomial q = act(g.element(i), p);
    const Cyclotomic c = q.coefficient(p.leading_monomial()) * p.leading_coefficient().inverse();
    if (!(q == p.scaled(c))) return false;
    if (scalars) scalars->push_back(c);
  }
  return true;
}

CycMatrix sym_power_matrix(const Mat2& g, int d) {
  CycMatrix m = CycMatrix::Constant(d + 1, d + 1, Cyclotomic());
  const Mat2 gi = inverse2(g);
  const Polynomial l1 = linear(gi(0, 0), gi(0, 1)), l2 = linear(gi(1, 0), gi(1, 1));
  std::vector<Polynomial> p1{Polynomial(1L)}, p2{Polynomial(1L)};
  for (int i = 1; i <= d; ++i) {
    p1.push_back(p1.back() * l1);
    p2.push_back(p2.back() * l2);
  }
  for (int k = 0; k <= d; ++k) {
    const Polynomial img = p1[d - k] * p2[k];
    for (const auto& [mono, c] : img.terms()) m(mono.b, k) = c;
  }
  return m;
}

std::vector<Polynomial> invariant_basis(const FiniteGroup& g, int d) {
  const auto& gens = g.generator_indices();
  CycMatrix stacked = CycMatrix::Constant(static_cast<Eigen::Index>(gens.size()) * (d + 1), d + 1, Cyclotomic());
  for (size_t s = 0; s < gens.size(); ++s) {
    CycMatrix m = sym_power_matrix(g.element(gens[s]), d);
    for (int i = 0; i <= d; ++i) m(i, i) -= Cyclotomic(1);
    stacked.middleRows(static_cast<Eigen::Index>(s) * (d + 1), d + 1) = m;
  }
  const CycMatrix ker = kernel(stacked);
  std::vector<Polynomial> out;
  for (Eigen::Index c = 0; c < ker.cols(); ++c) {
    Polynomial p;
    for (int k = 0; k <= d; ++k) p.add_term(Monomial{d - k, k}, ker(k, c));
    out.push_back(p);
  }
  return out;
}

int invariant_dim(const FiniteGroup& g, int d) { return static_cast<int>(invariant_basis(g, d).size()); }

int invariant_dim_by_averaging(const FiniteGroup& g, int d) {
  CycMatrix avg = CycMatrix::Constant(d + 1, d + 1, Cyclotomic());
  for (const auto& e : g.elements()) avg += sym_power_matrix(e, d);
  return rank(avg);
}

std::vector<long> molien_coeffs(const FiniteGroup& g, int d_max) {
  std::vector<Cyclotomic> sum(d_max + 1);
  for (int c = 0; c < g.num_classes(); ++c) {
    const Mat2& rep = g.element(g.class_rep(c));
    const Cyclotomic tau = rep(0, 0) + rep(1, 1);
    const Cyclotomic size(static_cast<long>(g.class_size(c)));
    // 1 / (1 - tau t + t^2): c_k = tau c_{k-1} - c_{k-2}
    Cyclotomic prev2, prev1(1);
    for (int k = 0; k <= d_max; ++k) {
      Cyclotomic ck = k == 0 ? Cyclotomic(1) : tau * prev1 - prev2;
      if (k > 0) {
        prev2 = prev1;
        prev1 = ck;
      }
      sum[k] += size * ck;
    }
  }
  std::vector<long> out;
  const Cyclotomic inv(ratio(1, g.order()));
  for (const auto& s : sum) {
    const Cyclotomic v = s * inv;
    verify(v.is_rational() && is_integer(v.rational_value()), "Molien coefficient is not an integer");
    out.push_back(v.rational_value().get_num().get_si());
  }
  return out;
}

std::vector<NamedPolynomial> fundamental_invariants(const GroupSpec& spec) {
  const Polynomial x = Polynomial::x(), y = Polynomial::y();
  switch (spec.family) {
    case Family::Cyclic: {
      const int l = spec.param;
      return {{"x^l", x.pow(l)}, {"xy", x * y}, {"y^l", y.pow(l)}};
    }
    case Family::BinaryDihedral: {
      const int n = spec.param;
      const Polynomial phi1 = x.pow(n) + y.pow(n), phi2 = x.pow(n) - y.pow(n), phi3 = x * y;
      if (n % 2 == 0) return {{"f1", phi3 * phi3}, {"f2", phi2 * phi2}, {"f3", phi1 * phi2 * phi3}};
      return {{"g1", phi3 * phi3}, {"g2", phi1 * phi2}, {"g3", phi2 * phi2 * phi3}};
    }
    case Family::Tetrahedral:
      return {{"f1", P("x^5y - xy^5")}, {"f2", P("x^8 + 14x^4y^4 + y^8")}, {"f3", P("x^12 - 33x^8y^4 - 33x^4y^8 + y^12")}};
    case Family::Octahedral:
      return {{"f1", P("x^10y^2 - 2x^6y^6 + x^2y^10")},
              {"f2", P("x^8 + 14x^4y^4 + y^8")},
              {"f3", P("x^17y - 34x^13y^5 + 34x^5y^13 - xy^17")}};
    case Family::Icosahedral:
      return {{"f1", P("x^11y + 11x^6y^6 - xy^11")},
              {"f2", P("-x^20 - y^20 + 228x^15y^5 - 228x^5y^15 - 494x^10y^10")},
              {"f3", P("x^30 + y^30 + 522x^25y^5 - 522x^5y^25 - 10005x^20y^10 - 10005x^10y^20")}};
  }
  throw SpecError("unknown family");
}

std::vector<Polynomial> polys(const std::vector<NamedPolynomial>& named) {
  std::vector<Polynomial> out;
  for (const auto& n : named) out.push_back(n.poly);
  return out;
}

std::vector<Monomial> printed_leading_terms(const GroupSpec& spec) {
  switch (spec.family) {
    case Family::Tetrahedral:
      return {{5, 1}, {8, 0}, {4, 5}, {1, 9}, {0, 12}};
    case Family::Octahedral:
      return {{8, 0}, {6, 6}, {4, 10}, {2, 14}, {1, 17}, {0, 18}};
    case Family::Icosahedral:
      return {{11, 1}, {20, 0}, {10, 11}, {6, 16}, {5, 21}, {1, 26}, {0, 30}};
    default:
      return {};
  }
}

ZeroFiber zero_fiber(const GroupSpec& spec) {
  ZeroFiber z;
  z.spec = spec;
  const FiniteGroup g = make_group(spec);
  z.invariants = fundamental_invariants(spec);
  z.invariants_ok = true;
  int max_deg = 0;
  for (const auto& f : z.invariants) {
    if (!is_invariant(g, f.poly)) z.invariants_ok = false;
    max_deg = std::max(max_deg, f.poly.degree());
  }
  z.gb = buchberger(polys(z.invariants));
  z.degree = z.gb.standard_monomials;
  if (z.degree < 0) throw VerificationError("zero fiber of " + spec.str() + " is not finite");
  z.hilbert = standard_monomials_by_degree(z.gb.leading);
  z.s_pairs_ok = s_pairs_reduce_to_zero(z.gb.basis);
  z.reduced_ok = is_reduced(z.gb.basis);
  z.low_degree_invariants_in_ideal = true;
  for (int d = 1; d <= max_deg; ++d)
    for (const auto& p : invariant_basis(g, d))
      if (!normal_form(p, z.gb.basis).is_zero()) z.low_degree_invariants_in_ideal = false;
  for (const auto& m : printed_leading_terms(spec))
    if (!in_monomial_ideal(m, z.gb.leading)) z.printed_leading_contained = false;
  z.equals_formula = z.degree == 2L * g.order() - 1;
  return z;
}

long zero_fiber_degree(const GroupSpec& spec) { return zero_fiber(spec).degree; }

std::string to_string(IdentityStatus s) {
  switch (s) {
    case IdentityStatus::Verified:
      return "verified";
    case IdentityStatus::Corrected:
      return "corrected";
    case IdentityStatus::Failed:
      return "failed";
  }
  return "?";
}

namespace {

Polynomial monomial_sum(const std::vector<Monomial>& ms) {
  Polynomial p;
  for (const auto& m : ms) p.add_term(m, Cyclotomic(1));
  return p;
}

class Ledger {
 public:
  Ledger(const GroupSpec& spec) : group_(make_group(spec)), inv_(polys(fundamental_invariants(spec))) {
    gb_ = buchberger(inv_).basis;
  }

  const FiniteGroup& group() const { return group_; }

  bool in_ideal(const Polynomial& p) const { return normal_form(p, gb_).is_zero(); }

  /// An expansion identity; with `member` the printed element is claimed to lie in I.
  void identity(std::string name, std::string printed, const Polynomial& recomputed, const Polynomial& printed_value,
                bool member, std::string note = "") {
    IdentityEntry e;
    e.name = std::move(name);
    e.printed = std::move(printed);
    e.recomputed = recomputed;
    e.printed_value = printed_value;
    e.note = std::move(note);
    const bool equal = recomputed == printed_value;
    e.status = equal ? IdentityStatus::Verified : IdentityStatus::Corrected;
    if (member) {
      if (in_ideal(printed_value)) {
        e.certified = printed_value;
      } else if (in_ideal(recomputed)) {
        e.certified = recomputed;
        append(e.note, "printed value is not in I; the recomputed value is");
      } else {
        e.status = IdentityStatus::Failed;
      }
      if (e.status != IdentityStatus::Failed) attach_witness(e);
    } else {
      e.in_ideal = false;
    }
    if (!equal) append(e.note, "printed right-hand side differs from the exact expansion");
    entries_.push_back(std::move(e));
  }

  /// Equality modulo the ideal generated by `modulus`.
  void congruence(std::string name, std::string printed, const Polynomial& lhs, const Polynomial& rhs,
                  const std::vector<Polynomial>& modulus, std::string note = "") {
    const auto basis = buchberger(modulus).basis;
    identity(std::move(name), std::move(printed), normal_form(lhs, basis), normal_form(rhs, basis), false,
             std::move(note));
    auto& e = entries_.back();
    e.recomputed = lhs;
    if (in_ideal(rhs)) {
      e.certified = rhs;
      attach_witness(e);
    }
  }

  void semi_invariant(std::string name, const Polynomial& p) {
    std::vector<Cyclotomic> scalars;
    const bool ok = is_semi_invariant(group_, p, &scalars);
    std::string note = ok ? "scalars:" : "not a semi-invariant";
    if (ok)
      for (const auto& c : scalars) note += " " + c.str();
    identity(std::move(name), "semi-invariant", ok ? p : Polynomial(), p, false, note);
  }

  void invariant(std::string name, const Polynomial& p) {
    Polynomial image = p;
    for (int i : group_.generator_indices()) {
      const Polynomial q = act(group_.element(i), p);
      if (!(q == p)) {
        image = q;
        break;
      }
    }
    identity(std::move(name), "invariant", image, p, true);
  }

  /// The element certified in I by the named entry.
  const Polynomial& certified(std::string_view name) const {
    for (const auto& e : entries_)
      if (e.name == name) {
        verify(e.in_ideal, "entry " + e.name + " is not certified");
        return e.certified;
      }
    throw VerificationError("no ledger entry " + std::string(name));
  }

  void mark_last_corrected() { entries_.back().status = IdentityStatus::Corrected; }

  std::vector<IdentityEntry> take() { return std::move(entries_); }

 private:
  static void append(std::string& note, const std::string& s) { note = note.empty() ? s : note + "; " + s; }

  void attach_witness(IdentityEntry& e) const {
    auto cof = homogeneous_cofactors(e.certified, inv_);
    if (!cof) {
      e.in_ideal = false;
      e.status = IdentityStatus::Failed;
      return;
    }
    Polynomial check;
    for (size_t i = 0; i < inv_.size(); ++i) check += (*cof)[i] * inv_[i];
    e.in_ideal = check == e.certified;
    if (!e.in_ideal) e.status = IdentityStatus::Failed;
    e.witness = std::move(*cof);
  }

  FiniteGroup group_;
  std::vector<Polynomial> inv_;
  std::vector<Polynomial> gb_;
  std::vector<IdentityEntry> entries_;
};

void cyclic_ledger(Ledger& L, int l) {
  const Polynomial x = Polynomial::x(), y = Polynomial::y();
  const Mat2& w = L.group().element(L.group().generator_indices()[0]);
  const Cyclotomic z = w(0, 0);
  L.identity("cyclic:w.x", "w . x = zeta^-1 x", act(w, x), x.scaled(z.inverse()), false);
  L.identity("cyclic:w.y", "w . y = zeta y", act(w, y), y.scaled(z), false);
  L.invariant("cyclic:x^l", x.pow(l));
  L.invariant("cyclic:xy", x * y);
  L.invariant("cyclic:y^l", y.pow(l));
  std::vector<Monomial> printed{{0, 0}};
  for (int a = 1; a < l; ++a) printed.push_back({a, 0});
  for (int b = 1; b < l; ++b) printed.push_back({0, b});
  const auto gb = buchberger(std::vector<Polynomial>{x.pow(l), x * y, y.pow(l)});
  L.identity("cyclic:standard-monomials", "quotient spanned by 1, x, ..., x^(l-1), y, ..., y^(l-1)",
             monomial_sum(standard_monomials(gb.leading)), monomial_sum(printed), false);
  L.identity("cyclic:dimension", "dimension 2l-1", Polynomial(gb.standard_monomials), Polynomial(2L * l - 1), false);
}

void bd_ledger(Ledger& L, int n) {
  const Polynomial x = Polynomial::x(), y = Polynomial::y();
  const Mat2 w1 = builtin_generators(GroupSpec{Family::BinaryDihedral, n})[0];
  const Mat2 w2 = builtin_generators(GroupSpec{Family::BinaryDihedral, n})[1];
  const Polynomial phi1 = x.pow(n) + y.pow(n), phi2 = x.pow(n) - y.pow(n), phi3 = x * y;
  const Cyclotomic mi_n = -imag_unit();
  Cyclotomic mi_pow(1);
  for (int k = 0; k < n; ++k) mi_pow *= mi_n;
  L.identity("bd:w1.phi1", "w1 . phi1 = -phi1", act(w1, phi1), -phi1, false);
  L.identity("bd:w2.phi1", "w2 . phi1 = (-i)^n phi1", act(w2, phi1), phi1.scaled(mi_pow), false);
  L.identity("bd:w1.phi2", "w1 . phi2 = -phi2", act(w1, phi2), -phi2, false);
  L.identity("bd:w2.phi2", "w2 . phi2 = -(-i)^n phi2", act(w2, phi2), phi2.scaled(-mi_pow), false);
  L.identity("bd:w1.phi3", "w1 . phi3 = phi3", act(w1, phi3), phi3, false);
  L.identity("bd:w2.phi3", "w2 . phi3 = -phi3", act(w2, phi3), -phi3, false);

  const Polynomial xn = x.pow(n), yn = y.pow(n);
  const Polynomial y2n2 = y.pow(2 * n + 2), xy2n1 = x * y.pow(2 * n + 1);
  std::vector<Monomial> printed_std;
  if (n % 2 == 0) {
    const Polynomial f1 = phi3 * phi3, f2 = phi2 * phi2, f3 = phi1 * phi2 * phi3;
    L.identity("bd-even:f1", "f1 = phi3^2 = x^2y^2", f1, P("x^2y^2"), true);
    L.identity("bd-even:f2", "f2 = phi2^2 = x^{2n} - 2x^n y^n + y^{2n}", f2, xn * xn - (xn * yn).scaled(Cyclotomic(2)) + yn * yn,
               true);
    L.identity("bd-even:f3", "f3 = phi1 phi2 phi3 = xy(x^{2n} - y^{2n})", f3, x * y * (xn * xn - yn * yn), true);
    L.invariant("bd-even:f1-invariant", f1);
    L.invariant("bd-even:f2-invariant", f2);
    L.invariant("bd-even:f3-invariant", f3);
    const Polynomial xn2 = n >= 2 ? x.pow(n - 2) : Polynomial(1L);
    L.identity("bd-even:y^{2n+2}", "y^{2n+2} = y^2 f2 - (x^{2n-2} - 2x^{n-2}y^n) f1",
               y * y * f2 - (x.pow(2 * n - 2) - (xn2 * yn).scaled(Cyclotomic(2))) * f1, y2n2, true);
    L.identity("bd-even:xy^{2n+1}", "xy^{2n+1} = 1/2 (xy f2 - f3 + 2x^{n-1}y^{n-1} f1)",
               (x * y * f2 - f3 + (x.pow(n - 1) * y.pow(n - 1)).scaled(Cyclotomic(2)) * f1).scaled(Cyclotomic(ratio(1, 2))),
               xy2n1, true);
    // {1, x..x^{2n-1}, y..y^{2n+1}, xy..x^{2n-1}y, xy^2..xy^{2n}}
    printed_std.push_back({0, 0});
    for (int a = 1; a <= 2 * n - 1; ++a) printed_std.push_back({a, 0});
    for (int b = 1; b <= 2 * n + 1; ++b) printed_std.push_back({0, b});
    for (int a = 1; a <= 2 * n - 1; ++a) printed_std.push_back({a, 1});
    for (int b = 2; b <= 2 * n; ++b) printed_std.push_back({1, b});
    std::vector<Monomial> lead;
    for (const auto& p : {f1, f2, y2n2, xy2n1}) lead.push_back(p.leading_monomial());
    L.identity("bd-even:spanning-set", "quotient by in(S) spanned by the listed monomials",
               monomial_sum(standard_monomials(lead)), monomial_sum(printed_std), false);
    L.identity("bd-even:dimension", "2n + (2n+1) + 2n-1 + 2n-1 = 8n-1", Polynomial(count_standard_monomials(lead)),
               Polynomial(8L * n - 1), false);
  } else {
    const Polynomial g1 = phi3 * phi3, g2 = phi1 * phi2, g3 = phi2 * phi2 * phi3;
    L.identity("bd-odd:g1", "g1 = phi3^2 = x^2y^2", g1, P("x^2y^2"), true);
    L.identity("bd-odd:g2", "g2 = phi1 phi2 = x^{2n} - y^{2n}", g2, xn * xn - yn * yn, true);
    L.identity("bd-odd:g3", "g3 = phi2^2 phi3 = xy(x^{2n} - 2x^n y^2 + y^{2n})", g3,
               x * y * (xn * xn - (xn * y * y).scaled(Cyclotomic(2)) + yn * yn), true,
               "middle term of the display carries y^2 where phi2^2 phi3 has y^n");
    L.invariant("bd-odd:g1-invariant", g1);
    L.invariant("bd-odd:g2-invariant", g2);
    L.invariant("bd-odd:g3-invariant", g3);
    L.identity("bd-odd:y^{2n+2}", "y^{2n+2} = x^{2n-2} g1 - y^2 g2", x.pow(2 * n - 2) * g1 - y * y * g2, y2n2, true);
    const Polynomial printed_combo =
        (g3 - (x.pow(n - 1) * y.pow(n - 1)).scaled(Cyclotomic(2)) * g1 - x * y * g2).scaled(Cyclotomic(ratio(1, 2)));
    const Polynomial sign_fixed =
        (g3 + (x.pow(n - 1) * y.pow(n - 1)).scaled(Cyclotomic(2)) * g1 - x * y * g2).scaled(Cyclotomic(ratio(1, 2)));
    L.identity("bd-odd:xy^{2n+1}", "xy^{2n+1} = 1/2 (g3 - 2x^{n-1}y^{n-1} g1 - xy g2)", printed_combo, xy2n1, true,
               sign_fixed == xy2n1 ? "holds with +2x^{n-1}y^{n-1} g1" : "");
    std::vector<Monomial> lead;
    for (const auto& p : {g1, g2, y2n2, xy2n1}) lead.push_back(p.leading_monomial());
    L.identity("bd-odd:dimension", "dimension bounded by 8n-1", Polynomial(count_standard_monomials(lead)),
               Polynomial(8L * n - 1), false);
  }
}

void tetra_ledger(Ledger& L) {
  const Polynomial x = Polynomial::x(), y = Polynomial::y();
  const Polynomial s3 = Polynomial(sqrt_minus3());
  const Polynomial x4 = P("x^4"), y4 = P("y^4"), x2y2 = P("x^2y^2");
  const Polynomial phi1 = P("x^5y - xy^5");
  const Polynomial phi2 = x4 + (s3 * x2y2).scaled(Cyclotomic(2)) + y4;
  const Polynomial phi3 = x4 - (s3 * x2y2).scaled(Cyclotomic(2)) + y4;
  L.semi_invariant("bt:phi1", phi1);
  L.semi_invariant("bt:phi2", phi2);
  L.semi_invariant("bt:phi3", phi3);
  const Polynomial f1 = phi1, f2 = phi2 * phi3, f3 = (phi2.pow(3) + phi3.pow(3)).scaled(Cyclotomic(ratio(1, 2)));
  L.identity("bt:f2", "f2 = phi2 phi3 = x^8 + 14x^4y^4 + y^8", f2, P("x^8 + 14x^4y^4 + y^8"), true);
  L.identity("bt:f3", "f3 = (phi2^3 + phi3^3)/2 = x^12 - 33x^8y^4 - 33x^4y^8 + y^12", f3,
             P("x^12 - 33x^8y^4 - 33x^4y^8 + y^12"), true);
  L.invariant("bt:f1-invariant", f1);
  L.invariant("bt:f2-invariant", f2);
  L.invariant("bt:f3-invariant", f3);
  const Polynomial g1 = y * f2 - P("x^3") * f1;
  L.identity("bt:g1", "g1 = y f2 - x^3 f1 = 15x^4y^5 + y^9", g1, P("15x^4y^5 + y^9"), true);
  const Polynomial g2 = x * g1 - P("15y^4") * f1;
  L.identity("bt:g2", "g2 = x g1 - 15y^4 f1 = xy^9", g2, P("xy^9"), true);
  const Polynomial h = f3 + P("47y^4 - x^4") * f2;
  L.identity("bt:h", "h = f3 + (47y^4 - x^4) f2 = 624x^4y^8 + 48y^12", h, P("624x^4y^8 + 48y^12"), true);
  const Polynomial g3 = h.scaled(Cyclotomic(5)) - P("208y^3") * g1;
  L.identity("bt:g3", "g3 = 5h - 208y^3 g1 = 32y^12", g3, P("32y^12"), true);
  std::vector<Monomial> lead;
  for (const auto& p : {f1, f2, g1, g2, g3}) lead.push_back(p.leading_monomial());
  L.identity("bt:initial-terms", "initial terms {x^5y, x^8, x^4y^5, xy^9, y^12}", monomial_sum(lead),
             monomial_sum(printed_leading_terms(GroupSpec{Family::Tetrahedral, 1})), false);
  L.identity("bt:codimension", "codimension 47", Polynomial(count_standard_monomials(lead)), Polynomial(47L), false);
}

void octa_ledger(Ledger& L) {
  const Polynomial x = Polynomial::x(), y = Polynomial::y();
  const Polynomial phi1 = P("x^5y - xy^5"), phi2 = P("x^8 + 14x^4y^4 + y^8"),
                   phi3 = P("x^12 - 33x^8y^4 - 33x^4y^8 + y^12");
  L.semi_invariant("bo:phi1", phi1);
  L.semi_invariant("bo:phi2", phi2);
  L.semi_invariant("bo:phi3", phi3);
  const Polynomial f1 = phi1 * phi1, f2 = phi2, f3 = phi1 * phi3;
  L.identity("bo:f1", "f1 = phi1^2 = x^10y^2 - 2x^6y^6 + x^2y^10", f1, P("x^10y^2 - 2x^6y^6 + x^2y^10"), true);
  L.identity("bo:f3", "f3 = phi1 phi3 = x^17y - 34x^13y^5 + 34x^5y^13 - xy^17", f3,
             P("x^17y - 34x^13y^5 + 34x^5y^13 - xy^17"), true);
  L.invariant("bo:f1-invariant", f1);
  L.invariant("bo:f2-invariant", f2);
  L.invariant("bo:f3-invariant", f3);
  const Polynomial g1 = (P("x^2y^2") * f2 - f1).scaled(Cyclotomic(ratio(1, 16)));
  L.identity("bo:g1", "g1 = (x^2y^2 f2 - f1)/16 = x^6y^6", g1, P("x^6y^6"), true);
  const Polynomial g2 = P("y^6") * f2 - P("x^2") * g1;
  L.identity("bo:g2", "g2 = y^6 f2 - x^2 g2 = 14x^4y^10 + y^14", g2, P("14x^4y^10 + y^14"), true,
             "the display multiplies x^2 by g2 itself; evaluated with g1 = x^6y^6");
  L.mark_last_corrected();
  const Polynomial g3 = P("x^2y^6") * P("x^8 + 14x^4y^4 + y^8") - P("x^4 + 14y^4") * g2;
  const bool g3_with_g1 = P("x^2y^6") * f2 - P("x^4 + 14y^4") * g1 == P("x^2y^14");
  L.identity("bo:g3", "g3 = x^2y^6(x^8 + 14x^4y^4 + y^8) - (x^4 + 14y^4) g2 = x^2y^14", g3, P("x^2y^14"), true,
             g3_with_g1 ? "holds with g1 = x^6y^6 in place of g2" : "");
  L.congruence("bo:y^10 f2 mod x^6y^6", "modulo g2 = x^6y^6, y^10(x^8 + 14x^4 + y^8) = 14x^4y^14 + y^18",
               P("y^10") * P("x^8 + 14x^4 + y^8"), P("14x^4y^14 + y^18"), {g1},
               "the modulus x^6y^6 is g1; the display drops y^4 from the middle term of f2");
  L.congruence("bo:y^10 f2 mod g1 (with f2)", "y^10 f2 = 14x^4y^14 + y^18 modulo x^6y^6", P("y^10") * f2,
               P("14x^4y^14 + y^18"), {g1});
  L.congruence("bo:g4", "14x^4y^14 + y^18 - 14x^2y^4 f1 = y^18 modulo x^6y^6",
               P("14x^4y^14 + y^18") - P("14x^2y^4") * f1, P("y^18"), {g1}, "the modulus x^6y^6 is g1");
  const Polynomial mult = P("7x^9y - 336x^5y^5 + 41xy^9");
  const Polynomial g5 = mult * f2 + P("4656x^3y^3") * g2 - f3.scaled(Cyclotomic(7));
  const bool g5_with_g1 = mult * f2 + P("4656x^3y^3") * g1 - f3.scaled(Cyclotomic(7)) == P("48xy^17");
  L.identity("bo:g5", "g5 = (7x^9y - 336x^5y^5 + 41xy^9) f2 + 4656x^3y^3 g2 - 7 f3 = 48xy^17", g5, P("48xy^17"), true,
             g5_with_g1 ? "holds with g1 = x^6y^6 in place of g2" : "");
  const std::vector<Polynomial> s{f2, g1, g2, L.certified("bo:g3"), L.certified("bo:g4"), L.certified("bo:g5")};
  std::vector<Monomial> lead;
  for (const auto& p : s) lead.push_back(p.leading_monomial());
  L.identity("bo:initial-terms", "initial terms {x^8, x^6y^6, x^4y^10, x^2y^14, xy^17, y^18}", monomial_sum(lead),
             monomial_sum(printed_leading_terms(GroupSpec{Family::Octahedral, 1})), false);
  L.identity("bo:codimension", "degree at most 95", Polynomial(count_standard_monomials(lead)), Polynomial(95L), false);
}

void icosa_ledger(Ledger& L) {
  const auto inv = fundamental_invariants(GroupSpec{Family::Icosahedral, 1});
  const Polynomial &f1 = inv[0].poly, &f2 = inv[1].poly, &f3 = inv[2].poly;
  const Polynomial x = Polynomial::x(), y = Polynomial::y();
  L.invariant("bi:f1-invariant", f1);
  L.invariant("bi:f2-invariant", f2);
  L.invariant("bi:f3-invariant", f3);
  const Polynomial g1 = P("x^9 - 239x^4y^5") * f1 + y * f2;
  L.identity("bi:g1", "g1 = (x^9 - 239x^4y^5) f1 + y f2 = -3124x^10y^11 + 11x^5y^16 - y^21", g1,
             P("-3124x^10y^11 + 11x^5y^16 - y^21"), true);
  const Polynomial g2 = P("x^10 - 239x^5y^5 + 3124y^10") * f1 + x * y * f2;
  L.identity("bi:g2", "g2 = (x^10 - 239x^5y^5 + 3124y^10) f1 + xy f2 = 34375x^6y^16 - 3125xy^21", g2,
             P("34375x^6y^16 - 3125xy^21"), true);
  const Rational c3124(3124);
  const Polynomial g3 = ((P("y^6") * f2 + P("x^9y^5") * f1).scaled(Cyclotomic(Rational(c3124 * c3124))) +
                         P("746636x^5 - 1543751y^5") * g1)
                            .scaled(Cyclotomic(ratio(1, 140)));
  const Polynomial g3_direction = P("273x^5y^21 + y^26");
  const Cyclotomic g3_scale = g3.coefficient(Monomial{0, 26});
  L.identity("bi:g3",
             "g3 = (3124^2 (y^6 f2 + x^9y^5 f1) + (3124*239 x^5 - 1543751 y^5) g1)/140 = -16020500x^5y^21 - 58683y^26",
             g3, P("-16020500x^5y^21 - 58683y^26"), true,
             g3 == g3_direction.scaled(g3_scale) ? "exact value is " + g3_scale.str() + " (273x^5y^21 + y^26)" : "");
  const Polynomial g4 =
      (P("16020500y^5") * g2 + P("34375x") * g3).scaled(Cyclotomic(Rational(Rational(-1) / Rational(Integer("52081300000")))));
  L.identity("bi:g4", "g4 = -(16020500y^5 g2 + 34375x g3)/52081300000 = xy^26", g4, P("xy^26"), true);
  const Polynomial h1 = f3 + P("x^10") * f2 - P("750x^14y^4 - 18749x^9y^9") * f1;
  L.identity("bi:h1", "h1 = f3 + x^10 f2 - (750x^14y^4 - 18749x^9y^9) f1 = 206761x^15y^15 - 28755x^10y^20 - 522x^5y^25 + y^30",
             h1, P("206761x^15y^15 - 28755x^10y^20 - 522x^5y^25 + y^30"), true);
  const Polynomial h2 = h1.scaled(Cyclotomic(3124)) + P("206761x^5y^4") * g1;
  L.identity("bi:h2", "h2 = 3124 h1 + 206761x^5y^4 g1 = -87556200x^10y^20 - 1837490x^5y^25 + 3124y^30", h2,
             P("-87556200x^10y^20 - 1837490x^5y^25 + 3124y^30"), true);
  // "modulo g2 and g3, h is a non-zero multiple of g5 = y^30"
  const auto basis = buchberger(std::vector<Polynomial>{g2, g3}).basis;
  const Polynomial r = normal_form(h2, basis);
  const bool multiple = r.size() == 1 && r.leading_monomial() == Monomial{0, 30};
  L.identity("bi:g5", "modulo g2 and g3, h is a non-zero multiple of g5 = y^30",
             multiple ? P("y^30") : r.monic(), P("y^30"), true, "remainder of h2: " + r.str());
  const std::vector<Polynomial> s{f1, f2, g1, g2, L.certified("bi:g3"), L.certified("bi:g4"), L.certified("bi:g5")};
  std::vector<Monomial> lead;
  for (const auto& p : s) lead.push_back(p.leading_monomial());
  L.identity("bi:initial-terms", "leading terms {x^11y, x^20, x^10y^11, x^6y^16, x^5y^21, xy^26, y^30}",
             monomial_sum(lead), monomial_sum(printed_leading_terms(GroupSpec{Family::Icosahedral, 1})), false);
  L.identity("bi:codimension", "dimension at most 239", Polynomial(count_standard_monomials(lead)), Polynomial(239L),
             false);
}

}  // namespace

std::vector<IdentityEntry> verify_identity_ledger(const GroupSpec& spec) {
  Ledger L(spec);
  switch (spec.family) {
    case Family::Cyclic:
      cyclic_ledger(L, spec.param);
      break;
    case Family::BinaryDihedral:
      bd_ledger(L, spec.param);
      break;
    case Family::Tetrahedral:
      tetra_ledger(L);
      break;
    case Family::Octahedral:
      octa_ledger(L);
      break;
    case Family::Icosahedral:
      icosa_ledger(L);
      break;
  }
  return L.take();
}

}  // namespace qzf
