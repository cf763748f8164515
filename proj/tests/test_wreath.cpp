#include <gtest/gtest.h>

#include "qzf/acceptance.hpp"
#include "qzf/error.hpp"
#include "qzf/mckay.hpp"
#include "qzf/wreath.hpp"

using namespace qzf;

namespace {

NumerologyReport run(const char* gamma, const char* delta, int n) {
  const GroupSpec s = GroupSpec::parse(gamma);
  static std::map<std::string, FiniteGroup> groups;
  auto it = groups.find(gamma);
  if (it == groups.end()) it = groups.emplace(gamma, make_group(s)).first;
  const WreathGroup w(it->second, resolve_subgroup(it->second, s, delta), n);
  return numerology(w);
}

// Hyperplanes x_p = gamma x_q for p < q, plus x_p = 0 when Delta is nontrivial.
long hyperplane_count(long gamma, long delta, int n) { return n * (n - 1) / 2 * gamma + (delta > 1 ? n : 0); }

}  // namespace

TEST(Wreath, Order) {
  const GroupSpec s = GroupSpec::parse("bt");
  const FiniteGroup g = make_group(s);
  EXPECT_EQ(WreathGroup(g, resolve_subgroup(g, s, "comm"), 3).order(), Integer(24 * 24 * 8 * 6));
  long count = 0;
  WreathGroup(g, resolve_subgroup(g, s, "comm"), 2).for_each([&](const MonomialElement&) { ++count; });
  EXPECT_EQ(count, 24 * 8 * 2);
}

TEST(Wreath, ForEachRespectsCap) {
  const GroupSpec s = GroupSpec::parse("bi");
  const FiniteGroup g = make_group(s);
  const WreathGroup w(g, resolve_subgroup(g, s, "whole"), 3);
  EXPECT_THROW(w.for_each([](const MonomialElement&) {}, 1000), CapExceeded);
}

TEST(Numerology, FrozenValues) {
  const NumerologyReport a = run("bt", "comm", 2);
  EXPECT_EQ(a.N, 38);
  EXPECT_EQ(a.Nstar, 26);
  EXPECT_EQ(a.g, 38);
  EXPECT_EQ(a.type_a, 24);
  EXPECT_EQ(a.type_b, 14);

  const NumerologyReport b = run("bd:2", "whole", 2);
  EXPECT_EQ(b.Nstar, 10);
  EXPECT_EQ(b.g, 22);

  const NumerologyReport c = run("cyclic:3", "whole", 3);
  EXPECT_EQ(c.N, 3 * 3 + 3 * 2);
  EXPECT_EQ(c.Nstar, 12);
  EXPECT_EQ(c.g, 10);
}

TEST(Numerology, ClosedFormsOverCases) {
  for (const auto& wc : numerology_cases()) {
    if (wc.n > 2) continue;
    const NumerologyReport r = run(wc.gamma.str().c_str(), wc.delta.c_str(), wc.n);
    const std::string label = wc.gamma.str() + " " + wc.delta + " n=" + std::to_string(wc.n);
    const long gamma = wc.gamma.order();
    const long delta = r.order.get_si() / (wc.n == 1 ? 1 : gamma) / (wc.n == 1 ? 1 : 2);
    EXPECT_EQ(r.N, reflection_count_formula(gamma, delta, wc.n)) << label;
    EXPECT_EQ(r.Nstar, hyperplane_count(gamma, delta, wc.n)) << label;
    EXPECT_EQ(r.g * wc.n, 2 * r.N) << label;
    EXPECT_EQ(r.g, g_formula(gamma, delta, wc.n)) << label;
    EXPECT_EQ(r.g + r.k, 2 * r.h) << label;
    EXPECT_TRUE(r.ordering && r.shapes_ok && r.equalities_iff_order_two) << label;
  }
}

TEST(Numerology, AllOrderTwoMeansEqualities) {
  // Delta = {1, -1} in bd:2 cannot be requested directly; cyclic:2 whole has only involutions.
  const NumerologyReport r = run("cyclic:2", "whole", 3);
  EXPECT_TRUE(r.all_order_two);
  EXPECT_EQ(r.g, r.h);
  EXPECT_EQ(r.h, r.k);
  const NumerologyReport s = run("cyclic:3", "whole", 2);
  EXPECT_FALSE(s.all_order_two);
  EXPECT_GT(s.g, s.k);
}

TEST(Numerology, Irreducible) {
  EXPECT_TRUE(run("bd:3", "cyc2", 2).irreducible);
  EXPECT_TRUE(run("bt", "whole", 2).irreducible);
}

TEST(Appendix, Identities) {
  for (const auto& [gamma, delta] : std::vector<std::pair<const char*, const char*>>{
           {"bd:3", "cyc2"}, {"cyclic:4", "comm"}, {"bt", "comm"}}) {
    const GroupSpec s = GroupSpec::parse(gamma);
    const FiniteGroup g = make_group(s);
    const AppendixReport a = appendix_checks(WreathGroup(g, resolve_subgroup(g, s, delta), 2));
    EXPECT_TRUE(a.ok()) << gamma << " " << delta;
    EXPECT_EQ(a.trace_sum, Cyclotomic(2 * (a.numbers.N + a.numbers.Nstar)));
  }
}

TEST(Hyperplanes, KeysAreCanonical) {
  const QuatVector a{Quaternion(1), Quaternion(Cyclotomic::zeta(4))};
  const QuatVector b{Quaternion(1), Quaternion(Cyclotomic::zeta(4).lifted(12))};
  EXPECT_EQ(canonical_key(a, 12), canonical_key(b, 12));
}

TEST(LModule, FrozenCharacters) {
  const GammaContext bd2 = make_context(GroupSpec::parse("bd:2"));
  const LCharacter L = character_of_L(bd2, resolve_subgroup(bd2.group, bd2.spec, "whole"), 2);
  EXPECT_EQ(L.dim, 23);
  EXPECT_EQ(L.ch, GVector(2 * bd2.roots.delta + bd2.roots.phi));

  const GammaContext bt = make_context(GroupSpec::parse("bt"));
  const LCharacter M = character_of_L(bt, resolve_subgroup(bt.group, bt.spec, "comm"), 2);
  EXPECT_EQ(M.dim, 39);
  EXPECT_EQ(M.g, 38);
  EXPECT_TRUE(M.dimension_bound);
  EXPECT_EQ(M.alpha.weighted_sum, 2 * 8 - 1);
  EXPECT_EQ(M.ch, GVector(bt.roots.delta + M.alpha.alpha));
}
