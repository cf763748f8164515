#include <gtest/gtest.h>

#include <random>

#include "qzf/cyclotomic.hpp"
#include "qzf/error.hpp"
#include "qzf/quaternion.hpp"
#include "qzf/rational.hpp"

using namespace qzf;

TEST(Rational, RatioIsCanonical) {
  EXPECT_EQ(ratio(6, 4), ratio(3, 2));
  EXPECT_EQ(to_string(ratio(6, 4)), "3/2");
  EXPECT_EQ(to_string(ratio(-8, 4)), "-2");
  EXPECT_EQ(parse_rational("-10/4"), ratio(-5, 2));
}

TEST(Rational, BinomialAndFactorial) {
  EXPECT_EQ(binomial(10, 3), 120);
  EXPECT_EQ(binomial(5, 7), 0);
  EXPECT_EQ(binomial(5, -1), 0);
  EXPECT_EQ(factorial(10), 3628800);
}

TEST(Cyclotomic, EulerPhi) {
  const int expected[] = {0, 1, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4};
  for (int m = 1; m <= 12; ++m) EXPECT_EQ(euler_phi(m), expected[m]) << m;
  EXPECT_EQ(euler_phi(120), 32);
}

TEST(Cyclotomic, RootsOfUnity) {
  for (int m : {3, 4, 5, 8, 12, 20}) {
    Cyclotomic p(1), sum(0);
    for (int k = 0; k < m; ++k) {
      sum += Cyclotomic::zeta(m, k);
      p *= Cyclotomic::zeta(m);
    }
    EXPECT_EQ(p, Cyclotomic(1)) << m;
    EXPECT_TRUE(sum.is_zero()) << m;
  }
}

TEST(Cyclotomic, QuadraticSurds) {
  EXPECT_EQ(sqrt5() * sqrt5(), Cyclotomic(5));
  EXPECT_EQ(sqrt_minus3() * sqrt_minus3(), Cyclotomic(-3));
  EXPECT_EQ(imag_unit() * imag_unit(), Cyclotomic(-1));
  EXPECT_TRUE((sqrt5() * sqrt5()).is_rational());
  EXPECT_FALSE(sqrt5().is_rational());
  EXPECT_THROW(sqrt5().rational_value(), ArithmeticError);
}

TEST(Cyclotomic, MixedConductorsLiftToLcm) {
  const Cyclotomic a = Cyclotomic::zeta(4) * Cyclotomic::zeta(3);
  EXPECT_EQ(a.conductor(), 12);
  EXPECT_EQ(a, Cyclotomic::zeta(12, 7));
  EXPECT_EQ(lcm_conductor(4, 6), 12);
}

TEST(Cyclotomic, InverseAndConjugate) {
  const Cyclotomic z = Cyclotomic::zeta(5) + Cyclotomic(2);
  EXPECT_EQ(z * z.inverse(), Cyclotomic(1));
  EXPECT_EQ(z.conj().conj(), z);
  EXPECT_TRUE(abs2(z).is_rational() || abs2(z) == abs2(z).conj());
  EXPECT_EQ(Cyclotomic::zeta(8).conj(), Cyclotomic::zeta(8, 7));
  EXPECT_THROW(Cyclotomic(0).inverse(), ArithmeticError);
}

TEST(Cyclotomic, TextRoundTrip) {
  const Cyclotomic z = ratio(1, 2) * Cyclotomic::zeta(20, 3) - Cyclotomic::zeta(20, 7) + Cyclotomic(3);
  EXPECT_EQ(Cyclotomic::parse(z.str(), 20), z);
  EXPECT_EQ(Cyclotomic(0).str(), "0");
  EXPECT_EQ(Cyclotomic::parse("0", 12), Cyclotomic(0).lifted(12));
}

TEST(Quaternion, Units) {
  using Q = Quaternion;
  EXPECT_EQ(Q::i() * Q::i(), Q(-1));
  EXPECT_EQ(Q::j() * Q::j(), Q(-1));
  EXPECT_EQ(Q::k() * Q::k(), Q(-1));
  EXPECT_EQ(Q::i() * Q::j(), Q::k());
  EXPECT_EQ(Q::j() * Q::i(), -Q::k());
  EXPECT_EQ(Q::i() * Q::j() * Q::k(), Q(-1));
}

TEST(Quaternion, NormIsMultiplicative) {
  const Quaternion a(Cyclotomic::zeta(8) + Cyclotomic(1), Cyclotomic::zeta(8, 3));
  const Quaternion b(Cyclotomic(2), Cyclotomic::zeta(8, 2) - Cyclotomic(1));
  EXPECT_EQ((a * b).norm_sq(), a.norm_sq() * b.norm_sq());
  EXPECT_EQ(a * a.inverse(), Quaternion(1));
  EXPECT_EQ((a * b).conj(), b.conj() * a.conj());
}

TEST(Quaternion, SplitFormIdentity) {
  const QuatVector x{Quaternion(Cyclotomic::zeta(12), Cyclotomic(1)), Quaternion(Cyclotomic(2), Cyclotomic::zeta(12, 5))};
  const QuatVector y{Quaternion(Cyclotomic(-1), Cyclotomic::zeta(12, 2)), Quaternion(Cyclotomic::zeta(12, 9))};
  const SplitForm s = split_form(x, y);
  const Quaternion h = hermitian_form(x, y);
  EXPECT_EQ(h, Quaternion(s.hermitian, s.symplectic));
  const SplitForm t = split_form(x, right_mul(y, Quaternion::j()));
  EXPECT_EQ(s.hermitian, conj(t.symplectic));
  // (x, x) is real and positive
  const SplitForm xx = split_form(x, x);
  ASSERT_TRUE(xx.hermitian.is_rational());
  EXPECT_GT(xx.hermitian.rational_value(), 0);
  EXPECT_TRUE(xx.symplectic.is_zero());
}
