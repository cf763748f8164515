#include "qzf/acceptance.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <random>
#include <set>
#include <sstream>

#include "qzf/bounds.hpp"
#include "qzf/error.hpp"
#include "qzf/groebner.hpp"
#include "qzf/invariants.hpp"
#include "qzf/mckay.hpp"
#include "qzf/quaternion.hpp"
#include "qzf/wreath.hpp"

namespace qzf {

std::vector<GroupSpec> catalogue() {
  std::vector<GroupSpec> v;
  for (int l = 2; l <= 8; ++l) v.push_back({Family::Cyclic, l});
  for (int n = 2; n <= 5; ++n) v.push_back({Family::BinaryDihedral, n});
  v.push_back({Family::Tetrahedral, 1});
  v.push_back({Family::Octahedral, 1});
  v.push_back({Family::Icosahedral, 1});
  return v;
}

std::vector<WreathCase> numerology_cases() {
  std::vector<GroupSpec> gammas;
  for (int l = 2; l <= 6; ++l) gammas.push_back({Family::Cyclic, l});
  for (int n = 2; n <= 3; ++n) gammas.push_back({Family::BinaryDihedral, n});
  gammas.push_back({Family::Tetrahedral, 1});
  std::vector<WreathCase> out;
  for (const auto& g : gammas) {
    std::vector<std::string> deltas{"whole", "comm"};
    if (g.family == Family::BinaryDihedral) deltas.push_back("cyc2");
    for (const auto& d : deltas)
      for (int n = 1; n <= 3; ++n) out.push_back({g, d, n});
  }
  return out;
}

namespace {

std::string label(const WreathCase& c) { return c.gamma.str() + "/" + c.delta + "/n=" + std::to_string(c.n); }

class Failures {
 public:
  void operator()(bool ok, const std::string& what) {
    ++checked_;
    if (!ok) {
      ++failed_;
      if (first_.empty()) first_ = what;
    }
  }
  CriterionResult result(int id, std::string title, const std::string& summary) const {
    std::ostringstream os;
    os << summary << " (" << checked_ - failed_ << "/" << checked_ << " checks)";
    if (failed_) os << "; first failure: " << first_;
    return {id, std::move(title), failed_ == 0 && checked_ > 0, os.str()};
  }

 private:
  int checked_ = 0;
  int failed_ = 0;
  std::string first_;
};

// --- random generators ------------------------------------------------------

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-6, 6), den(1, 4);
  return ratio(num(rng), den(rng));
}

Cyclotomic random_cyclotomic(std::mt19937_64& rng, int conductor) {
  std::vector<Rational> c(euler_phi(conductor));
  for (auto& x : c) x = random_rational(rng);
  return Cyclotomic(conductor, c);
}

int random_conductor(std::mt19937_64& rng) {
  static const int kConductors[] = {1, 3, 4, 5, 8, 12, 20};
  return kConductors[std::uniform_int_distribution<int>(0, 6)(rng)];
}

QuatVector random_quat_vector(std::mt19937_64& rng, int len) {
  QuatVector v(len);
  for (auto& q : v) q = Quaternion(random_cyclotomic(rng, 8), random_cyclotomic(rng, 8));
  return v;
}

Poly<Rational> random_poly(std::mt19937_64& rng, int max_deg, int max_terms) {
  std::uniform_int_distribution<int> deg(0, max_deg), terms(1, max_terms), coef(-3, 3);
  Poly<Rational> p;
  const int t = terms(rng);
  for (int i = 0; i < t; ++i) {
    const int d = deg(rng);
    const int a = std::uniform_int_distribution<int>(0, d)(rng);
    p.add_term(Monomial{a, d - a}, Rational(coef(rng)));
  }
  return p;
}

}  // namespace

// --- property suites ----------------------------------------------------------

namespace {

PropertyResult run_property(const std::string& name, int seeds, std::uint64_t base,
                            const std::function<std::string(std::mt19937_64&)>& body) {
  PropertyResult r{name, seeds, 0, ""};
  for (int s = 0; s < seeds; ++s) {
    std::mt19937_64 rng(base + static_cast<std::uint64_t>(s));
    std::string err;
    try {
      err = body(rng);
    } catch (const std::exception& e) {
      err = e.what();
    }
    if (!err.empty()) {
      ++r.failures;
      if (r.first_failure.empty()) r.first_failure = "seed " + std::to_string(base + s) + ": " + err;
    }
  }
  return r;
}

}  // namespace

PropertyResult property_field_axioms(int seeds, std::uint64_t base) {
  return run_property("field axioms", seeds, base, [](std::mt19937_64& rng) -> std::string {
    const Cyclotomic a = random_cyclotomic(rng, random_conductor(rng));
    const Cyclotomic b = random_cyclotomic(rng, random_conductor(rng));
    const Cyclotomic c = random_cyclotomic(rng, random_conductor(rng));
    if (!(a + b == b + a)) return "addition not commutative";
    if (!(a * b == b * a)) return "multiplication not commutative";
    if (!((a + b) + c == a + (b + c))) return "addition not associative";
    if (!((a * b) * c == a * (b * c))) return "multiplication not associative";
    if (!(a * (b + c) == a * b + a * c)) return "not distributive";
    if (!(a - a == Cyclotomic())) return "a - a != 0";
    if (!a.is_zero() && !(a * a.inverse() == Cyclotomic(1))) return "a * a^-1 != 1";
    if (!(conj(a * b) == conj(a) * conj(b))) return "conjugation not multiplicative";
    if (!(conj(conj(a)) == a)) return "conjugation not an involution";
    if (!abs2(a).is_rational() && !(conj(abs2(a)) == abs2(a))) return "|a|^2 not real";
    return "";
  });
}

PropertyResult property_split_form(int seeds, std::uint64_t base) {
  return run_property("split form", seeds, base, [](std::mt19937_64& rng) -> std::string {
    const int len = std::uniform_int_distribution<int>(1, 3)(rng);
    const QuatVector x = random_quat_vector(rng, len), y = random_quat_vector(rng, len);
    const SplitForm s = split_form(x, y);
    if (!(hermitian_form(x, y) == Quaternion(s.hermitian, s.symplectic))) return "split form does not reassemble";
    const SplitForm t = split_form(x, right_mul(y, Quaternion::j()));
    if (!(s.hermitian == conj(t.symplectic))) return "<x,y>' != conj <x, y j>";
    if (!(split_form(y, x).symplectic == -s.symplectic)) return "symplectic part not alternating";
    if (!(split_form(y, x).hermitian == conj(s.hermitian))) return "hermitian part not hermitian";
    return "";
  });
}

PropertyResult property_character_orthogonality(int seeds, std::uint64_t base) {
  static const std::vector<GammaContext> contexts = [] {
    std::vector<GammaContext> v;
    for (const auto& s : catalogue()) v.push_back(make_context(s));
    return v;
  }();
  return run_property("character orthogonality", seeds, base, [](std::mt19937_64& rng) -> std::string {
    const auto& ctx = contexts[std::uniform_int_distribution<size_t>(0, contexts.size() - 1)(rng)];
    const int k = ctx.table.size();
    const int i = std::uniform_int_distribution<int>(0, k - 1)(rng);
    const int j = std::uniform_int_distribution<int>(0, k - 1)(rng);
    const Cyclotomic ip = inner_product(ctx.group, ctx.table.chars[i], ctx.table.chars[j]);
    if (!(ip == Cyclotomic(i == j ? 1 : 0))) return ctx.spec.str() + ": <chi_i, chi_j> = " + ip.str();
    // column orthogonality for a random pair of classes
    const int a = std::uniform_int_distribution<int>(0, k - 1)(rng);
    const int b = std::uniform_int_distribution<int>(0, k - 1)(rng);
    Cyclotomic col;
    for (int r = 0; r < k; ++r) col += ctx.table.chars[r][a] * conj(ctx.table.chars[r][b]);
    const Cyclotomic expect = a == b ? Cyclotomic(ratio(ctx.group.order(), ctx.group.class_size(a))) : Cyclotomic();
    if (!(col == expect)) return ctx.spec.str() + ": column orthogonality fails";
    return "";
  });
}

PropertyResult property_groebner(int seeds, std::uint64_t base) {
  return run_property("groebner", seeds, base, [](std::mt19937_64& rng) -> std::string {
    const int count = std::uniform_int_distribution<int>(2, 3)(rng);
    std::vector<Poly<Rational>> gens;
    for (int i = 0; i < count; ++i) {
      auto p = random_poly(rng, 4, 3);
      if (!p.is_zero()) gens.push_back(p);
    }
    if (gens.empty()) return "";
    const auto gb = buchberger(gens);
    if (!s_pairs_reduce_to_zero(gb.basis)) return "an S-polynomial does not reduce to zero";
    if (!is_reduced(gb.basis)) return "basis not reduced";
    for (const auto& f : gens)
      if (!normal_form(f, gb.basis).is_zero()) return "generator not in the ideal of the basis";
    auto shuffled = gens;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    const auto gb2 = buchberger(shuffled);
    if (gb2.basis.size() != gb.basis.size()) return "basis depends on generator order";
    for (size_t i = 0; i < gb.basis.size(); ++i)
      if (!(gb.basis[i] == gb2.basis[i])) return "basis depends on generator order";
    return "";
  });
}

PropertyResult property_hyperplane_dedup(int seeds, std::uint64_t base) {
  struct Case {
    FiniteGroup gamma;
    std::unique_ptr<WreathGroup> w;
    std::vector<Reflection> refl;
    std::vector<Hyperplane> hs;
  };
  static const std::vector<std::shared_ptr<Case>> cases = [] {
    std::vector<std::shared_ptr<Case>> v;
    const std::vector<std::pair<std::string, std::string>> specs{
        {"cyclic:3", "whole"}, {"cyclic:4", "comm"}, {"bd:2", "comm"}, {"bd:3", "cyc2"}, {"bt", "comm"}};
    for (const auto& [g, d] : specs) {
      auto c = std::make_shared<Case>();
      const GroupSpec spec = GroupSpec::parse(g);
      c->gamma = make_group(spec);
      c->w = std::make_unique<WreathGroup>(c->gamma, resolve_subgroup(c->gamma, spec, d), 2);
      c->refl = reflections(*c->w);
      c->hs = hyperplanes(*c->w, c->refl);
      v.push_back(c);
    }
    return v;
  }();
  return run_property("hyperplane dedup", seeds, base, [](std::mt19937_64& rng) -> std::string {
    const auto& c = *cases[std::uniform_int_distribution<size_t>(0, cases.size() - 1)(rng)];
    auto refl = c.refl;
    std::shuffle(refl.begin(), refl.end(), rng);
    const auto hs = hyperplanes(*c.w, refl);
    if (hs.size() != c.hs.size()) return "hyperplane count depends on order";
    for (size_t i = 0; i < hs.size(); ++i)
      if (hs[i].key != c.hs[i].key || hs[i].stabilizer != c.hs[i].stabilizer)
        return "hyperplane data depends on order";
    return "";
  });
}

// --- criteria -----------------------------------------------------------------

namespace {

CriterionResult criterion_zero_fiber() {
  Failures f;
  for (const auto& s : catalogue()) {
    long expected = 0;
    if (s.family == Family::Cyclic) expected = 2L * s.param - 1;
    if (s.family == Family::BinaryDihedral) expected = 8L * s.param - 1;
    if (s.family == Family::Tetrahedral) expected = 47;
    if (s.family == Family::Octahedral) expected = 95;
    if (s.family == Family::Icosahedral) expected = 239;
    const ZeroFiber z = zero_fiber(s);
    f(z.degree == expected, s.str() + " degree " + std::to_string(z.degree));
    f(z.invariants_ok && z.low_degree_invariants_in_ideal, s.str() + " invariants");
    f(z.s_pairs_ok && z.reduced_ok, s.str() + " Groebner basis");
  }
  return f.result(1, "zero-fiber degrees", "2l-1, 8n-1, 47, 95, 239");
}

CriterionResult criterion_initial_ideal() {
  Failures f;
  for (const auto& s : {GroupSpec{Family::Tetrahedral, 1}, GroupSpec{Family::Octahedral, 1},
                        GroupSpec{Family::Icosahedral, 1}}) {
    const ZeroFiber z = zero_fiber(s);
    for (const auto& m : printed_leading_terms(s))
      f(in_monomial_ideal(m, z.gb.leading), s.str() + " " + to_string(m));
  }
  return f.result(2, "initial-ideal fixtures", "printed leading terms lie in the computed initial ideal");
}

CriterionResult criterion_identity_ledger() {
  Failures f;
  int verified = 0, corrected = 0;
  for (const auto& s : catalogue()) {
    for (const auto& e : verify_identity_ledger(s)) {
      f(e.status != IdentityStatus::Failed, s.str() + " " + e.name + " failed");
      if (e.status == IdentityStatus::Verified) ++verified;
      if (e.status == IdentityStatus::Corrected) ++corrected;
      if (!e.certified.is_zero()) {
        Polynomial sum;
        const auto gens = polys(fundamental_invariants(s));
        if (e.witness.size() == gens.size())
          for (size_t i = 0; i < gens.size(); ++i) sum += e.witness[i] * gens[i];
        f(e.in_ideal && sum == e.certified, s.str() + " " + e.name + " witness");
      }
    }
  }
  return f.result(3, "identity ledger",
                  std::to_string(verified) + " verified, " + std::to_string(corrected) + " corrected, none failed");
}

CriterionResult criterion_numerology() {
  Failures f;
  for (const auto& c : numerology_cases()) {
    const FiniteGroup g = make_group(c.gamma);
    const WreathGroup w(g, resolve_subgroup(g, c.gamma, c.delta), c.n);
    const auto refl = reflections(w);
    const auto hs = hyperplanes(w, refl);
    const NumerologyReport r = numerology(w, refl, hs);
    const std::string l = label(c);
    f(r.N_matches && r.N == static_cast<long>(refl.size()), l + " N");
    f(r.Nstar == static_cast<long>(hs.size()), l + " N*");
    f(r.g_integral && r.h_integral && r.k_integral, l + " g, h, k integral");
    f(r.g_plus_k, l + " g + k = 2h");
    f(r.shapes_ok, l + " reflection shapes");
  }
  return f.result(4, "reflection numerology", "N, N*, integrality and g+k=2h over 54 cases");
}

CriterionResult criterion_appendix() {
  Failures f;
  for (const auto& c : numerology_cases()) {
    const FiniteGroup g = make_group(c.gamma);
    const WreathGroup w(g, resolve_subgroup(g, c.gamma, c.delta), c.n);
    const AppendixReport r = appendix_checks(w);
    const std::string l = label(c);
    f(r.trace, l + " trace identity");
    f(r.f_operator, l + " f-operator");
    f(r.pairing_sum, l + " pairing sum");
    f(r.k_identity, l + " |A^H| = N* + 1 - k");
  }
  return f.result(5, "appendix identities", "trace, f-operator, pairing sum and |A^H| over 54 cases");
}

CriterionResult criterion_mckay() {
  Failures f;
  for (const auto& s : catalogue()) {
    const GammaContext ctx = make_context(s);
    std::string expected;
    switch (s.family) {
      case Family::Cyclic:
        expected = "A_" + std::to_string(s.param - 1) + "^(1)";
        break;
      case Family::BinaryDihedral:
        expected = "D_" + std::to_string(s.param + 2) + "^(1)";
        break;
      case Family::Tetrahedral:
        expected = "E_6^(1)";
        break;
      case Family::Octahedral:
        expected = "E_7^(1)";
        break;
      case Family::Icosahedral:
        expected = "E_8^(1)";
        break;
    }
    f(ctx.graph.type_name() == expected, s.str() + " type " + ctx.graph.type_name());
    bool dims_ok = ctx.roots.delta == ctx.graph.dims;
    for (int i = 0; i < ctx.table.size(); ++i) dims_ok = dims_ok && ctx.table.degree_int(i) == ctx.graph.dims[i];
    f(dims_ok, s.str() + " delta = dims");
    const GVector kd = ctx.roots.cartan * ctx.roots.delta;
    f(kd.isZero(), s.str() + " Cartan delta = 0");
    RatMatrix c(ctx.roots.cartan.rows(), ctx.roots.cartan.cols());
    for (Eigen::Index i = 0; i < c.rows(); ++i)
      for (Eigen::Index j = 0; j < c.cols(); ++j) c(i, j) = Rational(ctx.roots.cartan(i, j));
    f(rank(c) == c.rows() - 1, s.str() + " Cartan kernel is one-dimensional");
    long sq = 0;
    for (Eigen::Index i = 0; i < ctx.graph.dims.size(); ++i) sq += ctx.graph.dims[i] * ctx.graph.dims[i];
    f(sq == ctx.group.order(), s.str() + " sum n_i^2 = |Gamma|");
  }
  return f.result(6, "McKay graphs", "affine types, delta and sum n_i^2 over the catalogue");
}

// Arms of a tree from vertex c, each read outward.
std::vector<std::vector<int>> arms(const IntMatrix& e, int c) {
  std::vector<std::vector<int>> out;
  for (int s = 0; s < e.rows(); ++s) {
    if (e(c, s) == 0) continue;
    std::vector<int> arm{s};
    int prev = c, cur = s;
    for (;;) {
      int next = -1;
      for (int t = 0; t < e.rows(); ++t)
        if (t != prev && e(cur, t) != 0) next = t;
      if (next < 0) break;
      arm.push_back(next);
      prev = cur;
      cur = next;
    }
    out.push_back(arm);
  }
  return out;
}

int degree_of(const IntMatrix& e, int v) {
  int d = 0;
  for (int t = 0; t < e.rows(); ++t) d += static_cast<int>(e(v, t));
  return d;
}

// E6 labelling: centre 2; arms (2,1), (1,0), (1,0).
bool e6_alpha_fixture(const GammaContext& ctx, const GVector& alpha) {
  const auto& e = ctx.graph.edges;
  for (int c = 0; c < e.rows(); ++c) {
    if (degree_of(e, c) != 3) continue;
    if (alpha[c] != 2) return false;
    std::multiset<std::vector<long>> got;
    for (const auto& arm : arms(e, c)) {
      std::vector<long> vals;
      for (int v : arm) vals.push_back(alpha[v]);
      got.insert(vals);
    }
    return got == std::multiset<std::vector<long>>{{2, 1}, {1, 0}, {1, 0}};
  }
  return false;
}

// D labelling: 1 on every internal vertex and on exactly one leaf.
bool d_alpha_fixture(const GammaContext& ctx, const GVector& alpha) {
  const auto& e = ctx.graph.edges;
  int leaves_one = 0;
  for (int v = 0; v < e.rows(); ++v) {
    if (degree_of(e, v) >= 2 && alpha[v] != 1) return false;
    if (degree_of(e, v) == 1) {
      if (alpha[v] == 1) ++leaves_one;
      else if (alpha[v] != 0) return false;
    }
  }
  return leaves_one == 1;
}

CriterionResult criterion_lower_bound() {
  Failures f;
  for (const auto& c : numerology_cases()) {
    if (c.n < 2) continue;
    const LowerBoundReport r = lower_bound_report(c.gamma, c.delta, c.n);
    const std::string l = label(c);
    f(r.dim_matches && r.g_enumerated.has_value(), l + " dim L = g + 1 (root sum and 2N/n)");
    f(r.alpha_condition, l + " alpha condition");
    f(r.L.dimension_bound, l + " dimension bound with a single equality");
    f(r.fiber_invariants == 1, l + " one-dimensional invariants");
  }
  {
    const GammaContext ctx = make_context({Family::Tetrahedral, 1});
    const Subgroup d = resolve_subgroup(ctx.group, ctx.spec, "comm");
    f(e6_alpha_fixture(ctx, admissible_alpha(ctx, d).alpha), "E6 alpha labelling");
  }
  for (int n = 2; n <= 5; ++n) {
    const GammaContext ctx = make_context({Family::BinaryDihedral, n});
    const Subgroup d = resolve_subgroup(ctx.group, ctx.spec, "comm");
    f(d_alpha_fixture(ctx, admissible_alpha(ctx, d).alpha), "D alpha labelling bd:" + std::to_string(n));
  }
  for (const auto& s : catalogue()) {
    const LowerBoundReport r = lower_bound_report(s, "whole", 1);
    f(r.bound == Integer(zero_fiber_degree(s)), s.str() + " n = 1 bound equals the zero-fiber degree");
  }
  return f.result(7, "lower bound", "dim L = g+1, alpha condition, dimension bound, E6 and D fixtures");
}

CriterionResult criterion_tables() {
  Failures f;
  int oracles = 0;
  for (Eta eta : {Eta::Det, Eta::Triv})
    for (TableCase c : table_cases(eta))
      for (int n = 2; n <= 6; ++n) {
        const TableRow row = catalan_table(c, eta, n);
        const std::string l = to_string(eta) + " " + to_string(c) + " n=" + std::to_string(n);
        f(row.matches, l + " = " + row.closed_form);
        f(row.oracle_ok, l + " oracle");
        oracles += row.oracle_checked;
        if (eta == Eta::Triv) f(row.dimension == (c == TableCase::WholeNontrivial ? Integer(n + 1) : Integer(2)), l);
      }
  return f.result(8, "Catalan tables",
                  "both tables for n = 2..6, " + std::to_string(oracles) + " oracle instances");
}

CriterionResult criterion_molien() {
  Failures f;
  for (const auto& s : catalogue()) {
    const FiniteGroup g = make_group(s);
    const auto mol = molien_coeffs(g, 24);
    for (int d = 0; d <= 24; ++d) f(invariant_dim(g, d) == mol[d], s.str() + " d=" + std::to_string(d));
    const DeltaBounds b = delta_bounds_check(s);
    f(b.ok, s.str() + " degree bounds");
  }
  return f.result(9, "Molien consistency", "Molien series = invariant dimensions for d <= 24, degree bounds");
}

CriterionResult criterion_properties() {
  const int seeds = 100;
  const std::vector<PropertyResult> rs{property_field_axioms(seeds), property_split_form(seeds),
                                       property_character_orthogonality(seeds), property_groebner(seeds),
                                       property_hyperplane_dedup(seeds)};
  Failures f;
  for (const auto& r : rs) f(r.ok(), r.name + ": " + r.first_failure);
  return f.result(10, "property suites", "5 suites x 100 seeds");
}

}  // namespace

CriterionResult run_criterion(int id) {
  try {
    switch (id) {
      case 1:
        return criterion_zero_fiber();
      case 2:
        return criterion_initial_ideal();
      case 3:
        return criterion_identity_ledger();
      case 4:
        return criterion_numerology();
      case 5:
        return criterion_appendix();
      case 6:
        return criterion_mckay();
      case 7:
        return criterion_lower_bound();
      case 8:
        return criterion_tables();
      case 9:
        return criterion_molien();
      case 10:
        return criterion_properties();
    }
  } catch (const std::exception& e) {
    return {id, "criterion " + std::to_string(id), false, std::string("exception: ") + e.what()};
  }
  throw SpecError("no acceptance criterion " + std::to_string(id));
}

std::vector<CriterionResult> run_acceptance() {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= 10; ++id) out.push_back(run_criterion(id));
  return out;
}

}  // namespace qzf
