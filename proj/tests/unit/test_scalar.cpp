#include "ncspace/algebra/param_polynomial.hpp"
#include "ncspace/algebra/scalar.hpp"

#include <gtest/gtest.h>

#include <random>

using ncspace::algebra::GaussianRational;
using ncspace::algebra::Param;
using ncspace::algebra::ParamMonomial;
using ncspace::algebra::ParamPolynomial;
using ncspace::algebra::Rational;

namespace {

// Small exact oracle: (a + b i) with long numerators over a common long denominator.
struct Pair {
  long re_num, im_num, den;
};

GaussianRational from_pair(const Pair& p) {
  Rational re(p.re_num, p.den), im(p.im_num, p.den);
  re.canonicalize();
  im.canonicalize();
  return {re, im};
}

}  // namespace

TEST(GaussianRational, ProductMatchesSchoolbookFormula) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> num(-40, 40), den(1, 12);
  for (int trial = 0; trial < 500; ++trial) {
    const Pair a{num(rng), num(rng), den(rng)};
    const Pair b{num(rng), num(rng), den(rng)};
    const Pair expected{a.re_num * b.re_num - a.im_num * b.im_num, a.re_num * b.im_num + a.im_num * b.re_num,
                        a.den * b.den};
    EXPECT_EQ(from_pair(a) * from_pair(b), from_pair(expected));
  }
}

TEST(GaussianRational, DivisionInvertsMultiplication) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> num(-30, 30), den(1, 9);
  for (int trial = 0; trial < 300; ++trial) {
    const auto a = from_pair({num(rng), num(rng), den(rng)});
    const auto b = from_pair({num(rng), num(rng), den(rng)});
    if (b.is_zero()) continue;
    EXPECT_EQ(a * b / b, a);
  }
  EXPECT_THROW(GaussianRational(1) / GaussianRational(0), std::domain_error);
}

TEST(GaussianRational, ImaginaryUnitSquaresToMinusOne) {
  EXPECT_EQ(GaussianRational::i() * GaussianRational::i(), GaussianRational(-1));
  EXPECT_EQ(GaussianRational::fraction(3, 6, true), GaussianRational(0, Rational(1, 2)));
  EXPECT_EQ(GaussianRational::i().conj(), -GaussianRational::i());
}

TEST(ParamPolynomial, ThetaIsSkewSymmetric) {
  EXPECT_TRUE(ParamPolynomial::theta(2, 2).is_zero());
  EXPECT_EQ(ParamPolynomial::theta(3, 1), -ParamPolynomial::theta(1, 3));
  EXPECT_EQ(Param::theta(0, 1).name(), "th[0,1]");
  EXPECT_EQ(Param::translation(2).name(), "a[2]");
}

TEST(ParamPolynomial, RingAxiomsOnRandomPolynomials) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> idx(0, 3), coeff(-5, 5);
  auto random_poly = [&] {
    ParamPolynomial p;
    for (int t = 0; t < 4; ++t) {
      ParamPolynomial term = coeff(rng);
      term *= ParamPolynomial::translation(idx(rng));
      if (t % 2 == 0) term *= ParamPolynomial::theta(0, 1 + idx(rng) % 3);
      p += term;
    }
    return p;
  };
  for (int trial = 0; trial < 100; ++trial) {
    const auto a = random_poly(), b = random_poly(), c = random_poly();
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_TRUE((a - a).is_zero());
  }
}

TEST(ParamPolynomial, DegreeCountsByKind) {
  const auto p = ParamPolynomial::translation(0) * ParamPolynomial::translation(1) * ParamPolynomial::theta(0, 2);
  EXPECT_EQ(p.degree(Param::Kind::Translation), 2u);
  EXPECT_EQ(p.degree(Param::Kind::Theta), 1u);
  const auto& [m, c] = *p.terms().begin();
  EXPECT_EQ(c, GaussianRational(1));
  EXPECT_EQ(m.without(Param::Kind::Translation), ParamMonomial(Param::theta(0, 2)));
}
