#include <gtest/gtest.h>

#include "qzf/bounds.hpp"

using namespace qzf;

namespace {

// c (2n-2)! / ((n-1)! n!) for the index rows, binomials for the whole rows.
Integer expected_det(TableCase c, int n) {
  const Integer tail = factorial(2 * n - 2) / (factorial(n - 1) * factorial(n));
  switch (c) {
    case TableCase::WholeNontrivial:
      return binomial(2 * n, n);
    case TableCase::WholeTrivial:
      return binomial(2 * n - 1, n);
    case TableCase::Index2Nontrivial:
      return (4 * n - 2) * tail;
    case TableCase::Index2Trivial:
      return (3 * n - 2) * tail;
    case TableCase::E6Index3:
      return (4 * n - 3) * tail;
    case TableCase::DIndex4:
      return (5 * n - 4) * tail;
  }
  return -1;
}

}  // namespace

TEST(Tables, DetRowsMatchClosedForms) {
  for (int n = 2; n <= 5; ++n)
    for (TableCase c : table_cases(Eta::Det)) {
      const TableRow row = catalan_table(c, Eta::Det, n);
      EXPECT_TRUE(row.ok()) << to_string(c) << " n=" << n;
      EXPECT_EQ(row.dimension, expected_det(c, n)) << to_string(c) << " n=" << n;
      EXPECT_EQ(row.closed_value, closed_form_value(c, Eta::Det, n));
      // from n = 4 the only E6 instance (bt, |W| = 24^3 8 4!) is above the oracle cap
      if (n <= 3) EXPECT_GT(row.oracle_checked, 0) << to_string(c) << " n=" << n;
    }
}

TEST(Tables, TrivRows) {
  for (int n = 2; n <= 5; ++n) {
    EXPECT_EQ(catalan_table(TableCase::WholeNontrivial, Eta::Triv, n).dimension, n + 1);
    EXPECT_EQ(catalan_table(TableCase::Index2Nontrivial, Eta::Triv, n).dimension, 2);
  }
  EXPECT_EQ(table_cases(Eta::Triv).size(), 2u);
  EXPECT_EQ(table_cases(Eta::Det).size(), 6u);
}

TEST(Tables, FrozenSmallValues) {
  EXPECT_EQ(catalan_table(TableCase::E6Index3, Eta::Det, 3).dimension, 18);
  EXPECT_EQ(catalan_table(TableCase::DIndex4, Eta::Det, 4).dimension, 80);
  EXPECT_EQ(catalan_table(TableCase::Index2Trivial, Eta::Det, 4).dimension, 50);
}

TEST(Oracle, AgreesWithFormulaOnSingleQueries) {
  const GammaContext ctx = make_context(GroupSpec::parse("bt"));
  const Subgroup d = resolve_subgroup(ctx.group, ctx.spec, "comm");
  const LCharacter L = character_of_L(ctx, d, 2);
  for (int chi : quotient_vertices(ctx, d))
    for (Eta eta : {Eta::Det, Eta::Triv}) {
      SemiInvariantQuery q{&ctx, &d, 2, L.ch, chi, eta};
      EXPECT_EQ(semiinv_dim_formula(q), wreath_character_oracle(q)) << chi << " " << to_string(eta);
    }
}

TEST(LowerBound, FrozenReports) {
  const LowerBoundReport a = lower_bound_report(GroupSpec::parse("bd:2"), "whole", 2);
  EXPECT_EQ(a.g, 22);
  EXPECT_EQ(a.bound, 529);
  EXPECT_EQ(a.g_enumerated.value_or(-1), 22);
  EXPECT_TRUE(a.ok());

  const LowerBoundReport b = lower_bound_report(GroupSpec::parse("bt"), "comm", 2);
  EXPECT_EQ(b.g, 38);
  EXPECT_EQ(b.bound, 39 * 39);
  EXPECT_EQ(b.L.dim, 39);
  EXPECT_TRUE(b.ok());

  const LowerBoundReport c = lower_bound_report(GroupSpec::parse("bi"), "whole", 3, 1000);
  EXPECT_FALSE(c.g_enumerated.has_value());
  EXPECT_EQ(c.g, 2 * 120 + 2 * 119);
  EXPECT_TRUE(c.dim_matches);
}

TEST(LowerBound, RankOneIsZeroFiberDegree) {
  for (const char* spec : {"cyclic:4", "bd:3", "bt"}) {
    const GroupSpec s = GroupSpec::parse(spec);
    const LowerBoundReport r = lower_bound_report(s, "whole", 1);
    EXPECT_EQ(r.bound, 2 * s.order() - 1) << spec;
  }
}

TEST(DeltaBounds, Sandwich) {
  const DeltaBounds a = delta_bounds_check(GroupSpec::parse("cyclic:2"));
  EXPECT_EQ(a.order, 2);
  EXPECT_EQ(a.degree, 3);
  EXPECT_EQ(a.upper, 3);
  const DeltaBounds b = delta_bounds_check(GroupSpec::parse("cyclic:5"));
  EXPECT_EQ(b.degree, 9);
  EXPECT_EQ(b.upper, 15);
  const DeltaBounds c = delta_bounds_check(GroupSpec::parse("bi"));
  EXPECT_EQ(c.order, 120);
  EXPECT_EQ(c.degree, 239);
  EXPECT_EQ(c.upper, 7260);
  EXPECT_TRUE(a.ok && b.ok && c.ok);
}
