#include <gtest/gtest.h>

#include <numeric>

#include "qzf/error.hpp"
#include "qzf/groups.hpp"
#include "qzf/mckay.hpp"

using namespace qzf;

namespace {

struct Expected {
  const char* spec;
  int order;
  int classes;
  const char* type;
};

// Orders and class numbers of the finite subgroups of SL2(C).
const Expected kGroups[] = {
    {"cyclic:2", 2, 2, "A_1^(1)"}, {"cyclic:5", 5, 5, "A_4^(1)"}, {"cyclic:8", 8, 8, "A_7^(1)"},
    {"bd:2", 8, 5, "D_4^(1)"},     {"bd:3", 12, 6, "D_5^(1)"},    {"bd:5", 20, 8, "D_7^(1)"},
    {"bt", 24, 7, "E_6^(1)"},      {"bo", 48, 8, "E_7^(1)"},      {"bi", 120, 9, "E_8^(1)"},
};

Mat2 identity2() {
  Mat2 m;
  m << Cyclotomic(1), Cyclotomic(0), Cyclotomic(0), Cyclotomic(1);
  return m;
}

}  // namespace

TEST(GroupSpec, ParseAndPrint) {
  EXPECT_EQ(GroupSpec::parse("cyclic:7").str(), "cyclic:7");
  EXPECT_EQ(GroupSpec::parse("bd:4").order(), 16);
  EXPECT_EQ(GroupSpec::parse("bi").conductor(), 20);
  EXPECT_THROW(GroupSpec::parse("foo"), SpecError);
  EXPECT_THROW(GroupSpec::parse("cyclic:0"), SpecError);
  EXPECT_THROW(GroupSpec::parse("bd:0"), SpecError);
  EXPECT_THROW(GroupSpec::parse("bt:3"), SpecError);
}

TEST(FiniteGroup, OrdersAndClasses) {
  for (const auto& e : kGroups) {
    const GroupSpec s = GroupSpec::parse(e.spec);
    const FiniteGroup g = make_group(s);
    EXPECT_EQ(g.order(), e.order) << e.spec;
    EXPECT_EQ(g.num_classes(), e.classes) << e.spec;
    EXPECT_TRUE(g.element(0) == identity2()) << e.spec;
    int total = 0;
    for (int c = 0; c < g.num_classes(); ++c) total += g.class_size(c);
    EXPECT_EQ(total, g.order());
    for (const auto& m : g.elements()) EXPECT_EQ(m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0), Cyclotomic(1)) << e.spec;
  }
}

TEST(FiniteGroup, MultiplicationTable) {
  const FiniteGroup g = make_group(GroupSpec::parse("bo"));
  for (int a = 0; a < g.order(); a += 7)
    for (int b = 0; b < g.order(); b += 5) {
      EXPECT_TRUE(g.element(g.mul(a, b)) == Mat2(g.element(a) * g.element(b)));
      EXPECT_EQ(g.mul(a, g.inv(a)), 0);
    }
}

TEST(FiniteGroup, CapExceeded) {
  EXPECT_THROW(make_group(GroupSpec::parse("bi"), 100), CapExceeded);
}

TEST(Subgroups, CommutatorOrders) {
  // [bt, bt] = Q8, [bo, bo] = bt, bi is perfect, [BD_4n, BD_4n] = cyclic of order n.
  const std::pair<const char*, int> cases[] = {{"cyclic:6", 1}, {"bd:2", 2}, {"bd:3", 3}, {"bd:5", 5},
                                               {"bt", 8},       {"bo", 24},  {"bi", 120}};
  for (const auto& [spec, order] : cases) {
    const GroupSpec s = GroupSpec::parse(spec);
    const FiniteGroup g = make_group(s);
    const Subgroup d = resolve_subgroup(g, s, "comm");
    EXPECT_EQ(d.order(), order) << spec;
    EXPECT_TRUE(is_normal(g, d));
  }
}

TEST(Subgroups, ResolveVariants) {
  const GroupSpec s = GroupSpec::parse("bd:3");
  const FiniteGroup g = make_group(s);
  EXPECT_EQ(resolve_subgroup(g, s, "whole").order(), 12);
  EXPECT_EQ(resolve_subgroup(g, s, "cyc2").order(), 6);
  EXPECT_THROW(resolve_subgroup(g, s, "nonsense"), SpecError);
  const GroupSpec t = GroupSpec::parse("bt");
  EXPECT_THROW(resolve_subgroup(make_group(t), t, "cyc2"), SpecError);
}

TEST(Characters, TablesValidate) {
  for (const auto& e : kGroups) {
    const GroupSpec s = GroupSpec::parse(e.spec);
    const FiniteGroup g = make_group(s);
    const CharacterTable t = character_table(g, s);
    EXPECT_EQ(t.size(), g.num_classes()) << e.spec;
    EXPECT_TRUE(validate_table(g, t).ok()) << e.spec;
    long sq = 0;
    for (int i = 0; i < t.size(); ++i) sq += t.degree_int(i) * t.degree_int(i);
    EXPECT_EQ(sq, g.order()) << e.spec;
  }
}

TEST(Characters, SieveAgreesWithClosedForms) {
  for (const char* spec : {"cyclic:6", "bd:2", "bd:3", "bd:4"}) {
    const GroupSpec s = GroupSpec::parse(spec);
    const FiniteGroup g = make_group(s);
    EXPECT_TRUE(same_characters(character_table(g, s), sieve_character_table(g))) << spec;
  }
}

TEST(Characters, LinearCharacterCount) {
  // |Gamma / [Gamma, Gamma]|: l, 4, 3, 2, 1.
  const std::pair<const char*, int> cases[] = {{"cyclic:5", 5}, {"bd:3", 4}, {"bt", 3}, {"bo", 2}, {"bi", 1}};
  for (const auto& [spec, count] : cases) {
    const GroupSpec s = GroupSpec::parse(spec);
    const FiniteGroup g = make_group(s);
    const CharacterTable t = character_table(g, s);
    int linear = 0;
    for (int i = 0; i < t.size(); ++i) linear += t.is_linear(i);
    EXPECT_EQ(linear, count) << spec;
  }
}

TEST(McKay, TypesAndDelta) {
  for (const auto& e : kGroups) {
    const GammaContext ctx = make_context(GroupSpec::parse(e.spec));
    EXPECT_EQ(ctx.graph.type_name(), e.type);
    EXPECT_EQ(ctx.roots.delta, ctx.graph.dims);
    EXPECT_TRUE((ctx.roots.cartan * ctx.roots.delta).isZero()) << e.spec;
    EXPECT_EQ(ctx.roots.delta[0], 1);
    // Symmetric adjacency with no loops (|Gamma| > 2).
    if (ctx.group.order() > 2) {
      EXPECT_EQ(ctx.graph.edges, ctx.graph.edges.transpose());
      EXPECT_EQ(ctx.graph.edges.diagonal().sum(), 0);
    }
  }
}

TEST(McKay, PositiveRootCounts) {
  // Finite root systems A_{l-1}, D_{n+2}, E6, E7, E8.
  const std::pair<const char*, std::size_t> cases[] = {
      {"cyclic:5", 10}, {"bd:2", 12}, {"bd:3", 20}, {"bt", 36}, {"bo", 63}, {"bi", 120}};
  for (const auto& [spec, count] : cases) {
    const GammaContext ctx = make_context(GroupSpec::parse(spec));
    EXPECT_EQ(ctx.roots.positive.size(), count) << spec;
    for (const auto& r : ctx.roots.positive) EXPECT_EQ(pairing(ctx.roots, r, r), 2);
  }
}

TEST(McKay, HighestRoot) {
  const GammaContext ctx = make_context(GroupSpec::parse("bi"));
  GVector expected(9);
  expected = ctx.roots.delta;
  expected[0] = 0;
  EXPECT_EQ(ctx.roots.phi, expected);
  EXPECT_EQ(ctx.roots.delta.sum(), 30);  // Coxeter number of E8
}

TEST(McKay, SigmaAgreesWithBruteForce) {
  for (const char* spec : {"cyclic:4", "bd:2", "bt"}) {
    const GammaContext ctx = make_context(GroupSpec::parse(spec));
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      const GVector& alpha = ctx.roots.positive[seed % ctx.roots.positive.size()];
      const ParamVector c = generic_on_hyperplane(ctx.roots, alpha, seed);
      EXPECT_EQ(dot(alpha, c), 0);
      EXPECT_EQ(dot(ctx.roots.delta, c), 1);
      EXPECT_EQ(sigma_c(ctx.roots, c), sigma_c_bruteforce(ctx.roots, c, 4)) << spec << " seed " << seed;
    }
  }
}

TEST(McKay, DotExport) {
  const GammaContext ctx = make_context(GroupSpec::parse("bd:2"));
  const std::string dot = to_dot(ctx);
  EXPECT_NE(dot.find("graph"), std::string::npos);
  EXPECT_NE(dot.find("D_4^(1)"), std::string::npos);
}
