#include "qzf/bounds.hpp"

#include <map>

#include "qzf/error.hpp"
#include "qzf/invariants.hpp"

namespace qzf {

std::string to_string(Eta e) { return e == Eta::Triv ? "triv" : "det"; }

std::string to_string(TableCase c) {
  switch (c) {
    case TableCase::WholeNontrivial:
      return "Gamma=Delta, chi!=1";
    case TableCase::WholeTrivial:
      return "Gamma=Delta, chi=1";
    case TableCase::Index2Nontrivial:
      return "|Gamma:Delta|=2, chi|Delta!=1";
    case TableCase::Index2Trivial:
      return "|Gamma:Delta|=2, chi|Delta=1";
    case TableCase::E6Index3:
      return "E6, |Gamma:Delta|=3";
    case TableCase::DIndex4:
      return "D, |Gamma:Delta|=4";
  }
  return "?";
}

std::vector<TableCase> table_cases(Eta eta) {
  if (eta == Eta::Triv) return {TableCase::WholeNontrivial, TableCase::Index2Nontrivial};
  return {TableCase::WholeNontrivial, TableCase::WholeTrivial, TableCase::Index2Nontrivial,
          TableCase::Index2Trivial,   TableCase::E6Index3,     TableCase::DIndex4};
}

namespace {

std::vector<int> linear_vertices(const GammaContext& ctx) {
  std::vector<int> out;
  for (int i = 0; i < ctx.table.size(); ++i)
    if (ctx.table.is_linear(i)) out.push_back(i);
  return out;
}

Integer product_range(long lo, long hi) {
  Integer p = 1;
  for (long k = lo; k <= hi; ++k) p *= k;
  return p;
}

}  // namespace

Integer semiinv_dim_formula(const SemiInvariantQuery& q) {
  const GammaContext& ctx = *q.ctx;
  if (!ctx.table.is_linear(q.chi)) throw SpecError("chi is not a linear character");
  Integer total = 0;
  for (int psi : linear_vertices(ctx)) {
    if (!same_restriction(ctx.group, ctx.table.chars[q.chi], ctx.table.chars[psi], *q.delta)) continue;
    const long d = q.chL[psi];
    total += q.eta == Eta::Triv ? binomial(d, q.n) : binomial(d + q.n - 1, q.n);
  }
  return total;
}

Integer wreath_character_oracle(const SemiInvariantQuery& q, std::size_t cap) {
  const GammaContext& ctx = *q.ctx;
  const FiniteGroup& g = ctx.group;
  if (!ctx.table.is_linear(q.chi)) throw SpecError("chi is not a linear character");
  WreathGroup w(g, *q.delta, q.n);
  if (w.order() > Integer(static_cast<unsigned long>(cap)))
    throw CapExceeded("wreath group of order " + w.order().get_str() + " exceeds the oracle cap");

  // Tally elements by (sorted cycle-product classes, class of the total product, sign).
  std::map<std::tuple<std::vector<int>, int, int>, long> tally;
  w.for_each(
      [&](const MonomialElement& e) {
        const int n = q.n;
        std::vector<char> seen(n, 0);
        std::vector<int> cycle_classes;
        int sign = 1;
        int total = 0;  // identity of Gamma is index 0
        for (int i = 0; i < n; ++i) total = g.mul(total, e.gammas[i]);
        for (int q0 = 0; q0 < n; ++q0) {
          if (seen[q0]) continue;
          int len = 0, prod = 0, cur = q0;
          do {
            cur = e.perm[cur];
            seen[cur] = 1;
            prod = g.mul(e.gammas[cur], prod);
            ++len;
          } while (cur != q0);
          if (len % 2 == 0) sign = -sign;
          cycle_classes.push_back(g.class_of(prod));
        }
        std::sort(cycle_classes.begin(), cycle_classes.end());
        ++tally[{std::move(cycle_classes), g.class_of(total), sign}];
      },
      cap);

  std::vector<Cyclotomic> chi_l(g.num_classes());
  for (int c = 0; c < g.num_classes(); ++c)
    for (int i = 0; i < ctx.table.size(); ++i)
      if (q.chL[i] != 0) chi_l[c] += Cyclotomic(q.chL[i]) * ctx.table.chars[i][c];
  const ClassFunction& chi = ctx.table.chars[q.chi];

  Cyclotomic sum;
  for (const auto& [key, count] : tally) {
    const auto& [classes, total, sign] = key;
    Cyclotomic v(count);
    for (int c : classes) v *= chi_l[c];
    // module twist by det, character twist by eta
    const int s = q.eta == Eta::Triv ? sign : 1;
    v *= Cyclotomic(static_cast<long>(s)) * conj(chi[total]);
    sum += v;
  }
  verify(sum.is_rational(), "oracle sum is not rational");
  const Rational m = sum.rational_value() / Rational(w.order());
  verify(is_integer(m) && m >= 0, "oracle multiplicity is not a non-negative integer");
  return m.get_num();
}

std::string closed_form_text(TableCase c, Eta eta) {
  if (eta == Eta::Triv) return c == TableCase::WholeNontrivial ? "n+1" : "2";
  switch (c) {
    case TableCase::WholeNontrivial:
      return "2n(2n-1)(2n-2)...(n+2)(n+1)/n!";
    case TableCase::WholeTrivial:
      return "(2n-1)(2n-2)...(n+1)n/n!";
    case TableCase::Index2Nontrivial:
      return "(4n-2)(2n-2)(2n-3)...(n+1)n/n!";
    case TableCase::Index2Trivial:
      return "(3n-2)(2n-2)(2n-3)...(n+1)n/n!";
    case TableCase::E6Index3:
      return "(4n-3)(2n-2)(2n-3)...(n+1)n/n!";
    case TableCase::DIndex4:
      return "(5n-4)(2n-2)(2n-3)...(n+1)n/n!";
  }
  return "?";
}

Integer closed_form_value(TableCase c, Eta eta, int n) {
  if (eta == Eta::Triv) {
    if (c == TableCase::WholeNontrivial) return n + 1;
    if (c == TableCase::Index2Nontrivial) return 2;
    throw SpecError("no (chi, triv) row for " + to_string(c));
  }
  Integer num;
  switch (c) {
    case TableCase::WholeNontrivial:
      num = product_range(n + 1, 2 * n);
      break;
    case TableCase::WholeTrivial:
      num = product_range(n, 2 * n - 1);
      break;
    case TableCase::Index2Nontrivial:
      num = Integer(4 * n - 2) * product_range(n, 2 * n - 2);
      break;
    case TableCase::Index2Trivial:
      num = Integer(3 * n - 2) * product_range(n, 2 * n - 2);
      break;
    case TableCase::E6Index3:
      num = Integer(4 * n - 3) * product_range(n, 2 * n - 2);
      break;
    case TableCase::DIndex4:
      num = Integer(5 * n - 4) * product_range(n, 2 * n - 2);
      break;
  }
  const Integer den = factorial(n);
  verify(num % den == 0, "closed form is not an integer");
  return num / den;
}

namespace {

struct InstanceSpec {
  GroupSpec spec;
  std::string delta;  // subgroup text; "index2" picks the squares of a cyclic group
};

std::vector<InstanceSpec> instances_for(TableCase c) {
  auto cyc = [](int l) { return GroupSpec{Family::Cyclic, l}; };
  auto bd = [](int n) { return GroupSpec{Family::BinaryDihedral, n}; };
  const GroupSpec bt{Family::Tetrahedral, 1}, bo{Family::Octahedral, 1}, bi{Family::Icosahedral, 1};
  switch (c) {
    case TableCase::WholeNontrivial:
    case TableCase::WholeTrivial: {
      std::vector<InstanceSpec> v;
      for (int l = 2; l <= 6; ++l) v.push_back({cyc(l), "whole"});
      for (int n = 2; n <= 3; ++n) v.push_back({bd(n), "whole"});
      v.push_back({bt, "whole"});
      v.push_back({bo, "whole"});
      v.push_back({bi, "whole"});
      return v;
    }
    case TableCase::Index2Nontrivial:
    case TableCase::Index2Trivial:
      return {{cyc(2), "comm"}, {cyc(4), "index2"}, {cyc(6), "index2"},
              {bd(2), "cyc2"},  {bd(3), "cyc2"},    {bo, "comm"}};
    case TableCase::E6Index3:
      return {{bt, "comm"}};
    case TableCase::DIndex4:
      return {{bd(2), "comm"}, {bd(3), "comm"}, {bd(4), "comm"}, {bd(5), "comm"}};
  }
  return {};
}

Subgroup resolve_instance(const GammaContext& ctx, const InstanceSpec& is, std::string& label) {
  if (is.delta == "index2") {
    const FiniteGroup& g = ctx.group;
    const int w = g.generator_indices()[0];
    label = "gens:" + std::to_string(g.mul(w, w));
    return resolve_subgroup(g, is.spec, label);
  }
  label = is.delta;
  return resolve_subgroup(ctx.group, is.spec, is.delta);
}

bool qualifies(TableCase c, const GammaContext& ctx, const Subgroup& d, int chi) {
  switch (c) {
    case TableCase::WholeNontrivial:
      return chi != 0;
    case TableCase::WholeTrivial:
      return chi == 0;
    case TableCase::Index2Nontrivial:
      return !kernel_contains(ctx.group, ctx.table.chars[chi], d);
    case TableCase::Index2Trivial:
      return kernel_contains(ctx.group, ctx.table.chars[chi], d);
    case TableCase::E6Index3:
    case TableCase::DIndex4:
      return true;
  }
  return false;
}

}  // namespace

TableRow catalan_table(TableCase c, Eta eta, int n, std::size_t oracle_cap) {
  TableRow row;
  row.c = c;
  row.eta = eta;
  row.n = n;
  row.closed_form = closed_form_text(c, eta);
  row.closed_value = closed_form_value(c, eta, n);
  bool first = true;
  row.constant = true;
  for (const auto& is : instances_for(c)) {
    const GammaContext ctx = make_context(is.spec);
    TableInstance inst;
    inst.gamma = is.spec.str();
    const Subgroup d = resolve_instance(ctx, is, inst.delta);
    const LCharacter L = character_of_L(ctx, d, n);
    for (int chi : linear_vertices(ctx)) {
      if (!qualifies(c, ctx, d, chi)) continue;
      SemiInvariantQuery q{&ctx, &d, n, L.ch, chi, eta};
      inst.chis.push_back(chi);
      inst.dims.push_back(semiinv_dim_formula(q));
      if (first) {
        row.dimension = inst.dims.back();
        first = false;
      } else if (inst.dims.back() != row.dimension) {
        row.constant = false;
      }
    }
    if (inst.chis.empty()) continue;
    const WreathGroup w(ctx.group, d, n);
    if (w.order() <= Integer(static_cast<unsigned long>(oracle_cap))) {
      for (size_t k = 0; k < inst.chis.size(); ++k) {
        SemiInvariantQuery q{&ctx, &d, n, L.ch, inst.chis[k], eta};
        inst.oracle.push_back(wreath_character_oracle(q, oracle_cap));
        inst.oracle_ok = inst.oracle_ok && inst.oracle.back() == inst.dims[k];
      }
      ++row.oracle_checked;
      row.oracle_ok = row.oracle_ok && inst.oracle_ok;
    }
    row.instances.push_back(std::move(inst));
  }
  row.matches = !first && row.constant && row.dimension == row.closed_value;
  return row;
}

LowerBoundReport lower_bound_report(const GroupSpec& spec, const std::string& delta, int n, std::size_t cap) {
  LowerBoundReport r;
  const GammaContext ctx = make_context(spec);
  const Subgroup d = resolve_subgroup(ctx.group, spec, delta);
  r.gamma = spec.str();
  r.delta = delta;
  r.n = n;
  r.g = g_formula(ctx.group.order(), d.order(), n);
  mpz_pow_ui(r.bound.get_mpz_t(), Integer(r.g + 1).get_mpz_t(), static_cast<unsigned long>(n));
  r.L = character_of_L(ctx, d, n);
  const WreathGroup w(ctx.group, d, n);
  if (w.order() <= Integer(static_cast<unsigned long>(cap))) {
    const auto refl = reflections(w, cap);
    const long twice = 2L * static_cast<long>(refl.size());
    if (twice % n == 0) r.g_enumerated = twice / n;
  }
  r.dim_matches = r.L.dim == r.g + 1 && (!r.g_enumerated || r.L.dim == *r.g_enumerated + 1);
  r.alpha_condition = r.L.alpha.whole || r.L.alpha.weighted_sum == 2L * d.order() - 1;
  r.fiber_invariants = semiinv_dim_formula({&ctx, &d, n, r.L.ch, 0, Eta::Triv});
  for (int chi : linear_vertices(ctx))
    r.det_dims.emplace_back(chi, semiinv_dim_formula({&ctx, &d, n, r.L.ch, chi, Eta::Det}));
  return r;
}

DeltaBounds delta_bounds_check(const GroupSpec& spec) {
  DeltaBounds b;
  b.order = spec.order();
  b.degree = zero_fiber_degree(spec);
  b.upper = b.order * (b.order + 1) / 2;
  b.ok = b.order <= b.degree && b.degree <= b.upper;
  return b;
}

}  // namespace qzf
