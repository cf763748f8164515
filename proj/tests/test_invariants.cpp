#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "qzf/groebner.hpp"
#include "qzf/invariants.hpp"
#include "qzf/polynomial.hpp"

using namespace qzf;

namespace {

using QPoly = Poly<Rational>;

// Hilbert series (1 + t^c) / ((1 - t^a)(1 - t^b)) of a Kleinian invariant ring.
std::vector<long> kleinian_series(int a, int b, int c, int d_max) {
  std::vector<long> out(d_max + 1, 0);
  for (int i = 0; i * a <= d_max; ++i)
    for (int j = 0; i * a + j * b <= d_max; ++j) {
      ++out[i * a + j * b];
      if (i * a + j * b + c <= d_max) ++out[i * a + j * b + c];
    }
  return out;
}

// Z/l acting by diag(z, 1/z): invariant monomials x^a y^b with a = b mod l.
std::vector<long> cyclic_series(int l, int d_max) {
  std::vector<long> out(d_max + 1, 0);
  for (int d = 0; d <= d_max; ++d)
    for (int a = 0; a <= d; ++a) out[d] += ((a - (d - a)) % l == 0);
  return out;
}

}  // namespace

TEST(Polynomial, ArithmeticAndParse) {
  const Polynomial x = Polynomial::x(), y = Polynomial::y();
  const Polynomial p = (x + y) * (x - y);
  EXPECT_EQ(p, x * x - y * y);
  EXPECT_EQ(p.leading_monomial(), (Monomial{2, 0}));
  EXPECT_EQ(parse_polynomial(p.str()), p);
  EXPECT_EQ(parse_polynomial("x^11*y+11*x^6*y^6-x*y^11").size(), 3u);
  EXPECT_TRUE(lex_greater(Monomial{1, 0}, Monomial{0, 5}));
}

TEST(Polynomial, Substitute) {
  const QPoly x = QPoly::x(), y = QPoly::y();
  const QPoly p = x * x * y + QPoly(3);
  EXPECT_EQ(substitute(p, x + y, x - y), (x + y) * (x + y) * (x - y) + QPoly(3));
}

TEST(Groebner, KnownBasis) {
  // <x^2 - y, xy - 1>: lex basis {x - y^2, y^3 - 1}.
  const QPoly x = QPoly::x(), y = QPoly::y();
  const auto gb = buchberger<Rational>({x * x - y, x * y - QPoly(1)});
  ASSERT_EQ(gb.basis.size(), 2u);
  EXPECT_EQ(gb.basis[0], x - y * y);
  EXPECT_EQ(gb.basis[1], y * y * y - QPoly(1));
  EXPECT_EQ(gb.standard_monomials, 3);
  EXPECT_TRUE(s_pairs_reduce_to_zero(gb.basis));
  EXPECT_TRUE(normal_form(x * x * x * x - y * y, gb.basis).is_zero());
}

TEST(Groebner, StandardMonomials) {
  const std::vector<Monomial> lead{{3, 0}, {1, 2}, {0, 4}};
  // 1, x, y, x^2, xy, y^2, x^2y, y^3
  EXPECT_EQ(count_standard_monomials(lead), 8);
  EXPECT_EQ(standard_monomials(lead).size(), 8u);
  EXPECT_EQ(standard_monomials_by_degree(lead), (std::vector<long>{1, 2, 3, 2}));
  EXPECT_TRUE(in_monomial_ideal({2, 3}, lead));
  EXPECT_FALSE(in_monomial_ideal({2, 1}, lead));
  EXPECT_EQ(count_standard_monomials({{3, 0}}), -1);
}

TEST(Invariants, ActionConvention) {
  // w = diag(z, 1/z) acts by x -> x/z, y -> z y.
  const FiniteGroup g = make_group(GroupSpec::parse("cyclic:5"));
  const Mat2& w = g.element(g.generator_indices().front());
  const Cyclotomic z = w(0, 0);
  EXPECT_EQ(act(w, Polynomial::x()), Polynomial::x().scaled(z.inverse()));
  EXPECT_EQ(act(w, Polynomial::y()), Polynomial::y().scaled(z));
}

TEST(Invariants, DimensionsMatchHilbertSeries) {
  const int d_max = 32;
  struct Case {
    const char* spec;
    std::vector<long> series;
  };
  const Case cases[] = {{"cyclic:4", cyclic_series(4, d_max)},
                        {"bd:2", kleinian_series(4, 4, 6, d_max)},
                        {"bd:3", kleinian_series(4, 6, 8, d_max)},
                        {"bt", kleinian_series(6, 8, 12, d_max)},
                        {"bo", kleinian_series(8, 12, 18, d_max)},
                        {"bi", kleinian_series(12, 20, 30, d_max)}};
  for (const auto& c : cases) {
    const FiniteGroup g = make_group(GroupSpec::parse(c.spec));
    const std::vector<long> molien = molien_coeffs(g, d_max);
    for (int d = 0; d <= d_max; ++d) {
      EXPECT_EQ(molien[d], c.series[d]) << c.spec << " d=" << d;
      if (d <= 24) EXPECT_EQ(invariant_dim(g, d), c.series[d]) << c.spec << " d=" << d;
    }
  }
}

TEST(Invariants, AveragingAgreesWithKernel) {
  const FiniteGroup g = make_group(GroupSpec::parse("bt"));
  for (int d : {6, 8, 12}) EXPECT_EQ(invariant_dim_by_averaging(g, d), invariant_dim(g, d));
}

TEST(Invariants, FundamentalInvariantDegrees) {
  const std::pair<const char*, std::multiset<int>> cases[] = {
      {"cyclic:5", {5, 2, 5}}, {"bd:4", {8, 4, 10}}, {"bd:3", {6, 4, 8}},
      {"bt", {6, 8, 12}},     {"bo", {8, 12, 18}},  {"bi", {12, 20, 30}}};
  for (const auto& [spec, degrees] : cases) {
    const GroupSpec s = GroupSpec::parse(spec);
    const FiniteGroup g = make_group(s);
    std::multiset<int> got;
    for (const auto& f : fundamental_invariants(s)) {
      EXPECT_TRUE(is_invariant(g, f.poly)) << spec << " " << f.name;
      got.insert(f.poly.leading_monomial().degree());
    }
    EXPECT_EQ(got, degrees) << spec;
  }
}

TEST(ZeroFiber, DegreeIsTwiceOrderMinusOne) {
  for (const char* spec : {"cyclic:2", "cyclic:7", "bd:2", "bd:3", "bd:5", "bt", "bo"}) {
    const GroupSpec s = GroupSpec::parse(spec);
    const ZeroFiber z = zero_fiber(s);
    EXPECT_EQ(z.degree, 2 * s.order() - 1) << spec;
    long total = 0;
    for (long h : z.hilbert) total += h;
    EXPECT_EQ(total, z.degree);
    EXPECT_TRUE(z.invariants_ok && z.low_degree_invariants_in_ideal && z.s_pairs_ok && z.reduced_ok) << spec;
    EXPECT_TRUE(z.printed_leading_contained) << spec;
  }
}

TEST(ZeroFiber, Icosahedral) {
  const ZeroFiber z = zero_fiber(GroupSpec::parse("bi"));
  EXPECT_EQ(z.degree, 239);
  EXPECT_TRUE(z.printed_leading_contained);
  EXPECT_EQ(z.gb.leading.back(), (Monomial{0, 30}));
  EXPECT_EQ(z.gb.leading.front(), (Monomial{20, 0}));
}

TEST(Ledger, NoFailuresAndKnownCorrections) {
  const std::set<std::string> corrected_expected{
      "bd-odd:g3", "bd-odd:xy^{2n+1}", "bt:g2", "bo:g2", "bo:g3", "bo:y^10 f2 mod x^6y^6",
      "bo:g5",     "bi:g3",            "bi:g4", "bi:h2"};
  std::set<std::string> corrected;
  for (const char* spec : {"cyclic:5", "bd:2", "bd:3", "bd:4", "bd:5", "bt", "bo", "bi"}) {
    for (const auto& e : verify_identity_ledger(GroupSpec::parse(spec))) {
      EXPECT_NE(e.status, IdentityStatus::Failed) << spec << " " << e.name << ": " << e.note;
      if (e.status == IdentityStatus::Corrected) {
        corrected.insert(e.name);
        EXPECT_FALSE(e.note.empty()) << e.name;
      }
    }
  }
  EXPECT_EQ(corrected, corrected_expected);
}

TEST(Ledger, WitnessesExpand) {
  const GroupSpec s = GroupSpec::parse("bo");
  const auto basis = polys(fundamental_invariants(s));
  for (const auto& e : verify_identity_ledger(s)) {
    if (e.witness.empty()) continue;
    ASSERT_EQ(e.witness.size(), basis.size()) << e.name;
    Polynomial sum;
    for (std::size_t i = 0; i < basis.size(); ++i) sum += e.witness[i] * basis[i];
    EXPECT_EQ(sum, e.certified) << e.name;
  }
}
