#include <gtest/gtest.h>

#include "qzf/error.hpp"
#include "qzf/report.hpp"

using namespace qzf;

TEST(Report, VerdictStrings) {
  for (Verdict v : {Verdict::Pass, Verdict::Fail, Verdict::Corrected, Verdict::Skipped})
    EXPECT_EQ(parse_verdict(to_string(v)), v);
  EXPECT_EQ(to_string(Verdict::Skipped), "skipped(cap)");
  EXPECT_THROW(parse_verdict("maybe"), SpecError);
}

TEST(Report, PassedAndSkipped) {
  Report r;
  r.check("a", true);
  r.add({"b", Verdict::Corrected, "note"});
  EXPECT_TRUE(r.passed());
  EXPECT_FALSE(r.any_skipped());
  r.add({"c", Verdict::Skipped, ""});
  EXPECT_TRUE(r.any_skipped());
  r.check("d", false, "why");
  EXPECT_FALSE(r.passed());
  EXPECT_EQ(r.text(), "[pass] a\n[corrected] b: note\n[skipped(cap)] c\n[fail] d: why\n");
}

TEST(Report, JsonRoundTrip) {
  Report r;
  r.command = "numerology";
  r.args = {{"gamma", "bt"}, {"n", 2}};
  r.check("x", true, "1 vs 1");
  r.add({"y", Verdict::Corrected, "fixed"});
  r.data["value"] = "38";
  const Json j = r.to_json();
  const Report back = Report::from_json(Json::parse(j.dump()));
  EXPECT_EQ(back.command, r.command);
  EXPECT_EQ(back.args, Json({{"gamma", "bt"}, {"n", "2"}}));
  EXPECT_EQ(back.checks, r.checks);
  EXPECT_EQ(back.data, r.data);
  EXPECT_EQ(back.to_json().dump(), j.dump());
}

TEST(Report, NumbersAreStrings) {
  Report r;
  r.data["counts"] = {{"N", 38}, {"list", {1, 2}}, {"flag", true}};
  const Json j = r.to_json();
  EXPECT_EQ(j["data"]["counts"]["N"], "38");
  EXPECT_EQ(j["data"]["counts"]["list"][1], "2");
  EXPECT_EQ(j["data"]["counts"]["flag"], true);
  r.data["x"] = 0.5;
  EXPECT_THROW(r.to_json(), Error);
}

TEST(Report, NumerologyLayout) {
  const GroupSpec s = GroupSpec::parse("bt");
  const FiniteGroup g = make_group(s);
  AppendixReport a = appendix_checks(WreathGroup(g, resolve_subgroup(g, s, "comm"), 2));
  a.numbers.gamma = "bt";
  Report r;
  r.data["appendix"] = to_json(a);
  const Json j = r.to_json()["data"]["appendix"];
  EXPECT_EQ(j["group"]["gamma"], "bt");
  EXPECT_EQ(j["group"]["delta"], "comm");
  EXPECT_EQ(j["n"], "2");
  EXPECT_EQ(j["N"], "38");
  EXPECT_EQ(j["Nstar"], "26");
  EXPECT_EQ(j["g"], "38");
  for (const char* key : {"g", "h", "k"}) EXPECT_EQ(j["integral"][key], true);
  for (const char* key : {"trace", "f_operator", "pairing_sum", "k_identity"}) EXPECT_EQ(j["checks"][key], true);
}

TEST(Report, PolynomialRoundTrip) {
  const Polynomial p = parse_polynomial("x^11*y+11*x^6*y^6-x*y^11") +
                       Polynomial::monomial(Cyclotomic::zeta(12, 5), 2, 3) +
                       Polynomial::monomial(Cyclotomic::zeta(4), 0, 1);
  const Json j = to_json(p, 4);
  EXPECT_EQ(j.at("conductor").get<int>(), 12);
  EXPECT_EQ(polynomial_from_json(j), p);
  Report r;
  r.data["p"] = j;
  EXPECT_EQ(polynomial_from_json(r.to_json()["data"]["p"]), p);
}

TEST(Report, SerializationIsDeterministic) {
  const GroupSpec s = GroupSpec::parse("bd:3");
  const FiniteGroup g = make_group(s);
  const WreathGroup w(g, resolve_subgroup(g, s, "cyc2"), 2);
  const std::string a = to_json(numerology(w)).dump();
  const std::string b = to_json(numerology(w)).dump();
  EXPECT_EQ(a, b);
  const ZeroFiber z = zero_fiber(s);
  EXPECT_EQ(to_json(z).dump(), to_json(zero_fiber(s)).dump());
}
