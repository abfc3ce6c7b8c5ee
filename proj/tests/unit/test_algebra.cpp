#include "ncspace/algebra/errors.hpp"
#include "ncspace/algebra/poincare_algebra.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace ncspace::algebra;

namespace {

const GaussianRational I = GaussianRational::i();

// Independent bracket table written straight from the commutation relations,
// with J_{mu nu} for arbitrary index order.
AlgebraElement oracle_bracket(const PoincareAlgebra& alg, Generator a, Generator b) {
  auto J = [&](int m, int n) { return alg.lorentz(m, n); };
  auto P = [&](int m) { return alg.momentum(m); };
  auto scaled = [](AlgebraElement e, int c) { return e * ParamPolynomial(GaussianRational(c) * I); };
  if (a.is_momentum() && b.is_momentum()) return alg.zero();
  if (!a.is_momentum() && b.is_momentum()) {
    const int r = a.mu, s = a.nu, mu = b.mu;
    return scaled(P(s), eta(mu, r)) - scaled(P(r), eta(mu, s));
  }
  if (a.is_momentum() && !b.is_momentum()) return -oracle_bracket(alg, b, a);
  const int m = a.mu, n = a.nu, r = b.mu, s = b.nu;
  return scaled(J(n, s), eta(m, r)) - scaled(J(n, r), eta(m, s)) - scaled(J(m, s), eta(n, r)) +
         scaled(J(m, r), eta(n, s));
}

AlgebraElement random_element(const PoincareAlgebra& alg, std::mt19937_64& rng, int max_len = 3) {
  std::uniform_int_distribution<int> gen(0, alg.generator_count() - 1), len(1, max_len), c(-3, 3);
  AlgebraElement e = alg.zero();
  for (int t = 0; t < 3; ++t) {
    AlgebraElement word = alg.scalar(GaussianRational(c(rng), c(rng)));
    const int l = len(rng);
    for (int k = 0; k < l; ++k) word = word * AlgebraElement::generator(alg.dimension(), generator_at(gen(rng), alg.dimension()));
    e += word;
  }
  return e;
}

}  // namespace

TEST(Brackets, MatchIndependentTableInEveryDimension) {
  for (int d = 2; d <= 5; ++d) {
    const PoincareAlgebra alg(d);
    for (int a = 0; a < alg.generator_count(); ++a)
      for (int b = 0; b < alg.generator_count(); ++b) {
        const Generator ga = generator_at(a, d), gb = generator_at(b, d);
        EXPECT_TRUE(alg.equals(alg.structure_commutator(ga, gb), oracle_bracket(alg, ga, gb)))
            << "d=" << d << " [" << ga.name() << "," << gb.name() << "]";
      }
  }
}

TEST(Brackets, BoostsCloseOnRotation) {
  const PoincareAlgebra alg(4);
  const auto lhs = alg.commutator(alg.lorentz(0, 1), alg.lorentz(0, 2));
  EXPECT_TRUE(alg.equals(lhs, alg.lorentz(1, 2) * ParamPolynomial(I)));
}

TEST(Generators, OrderPutsLorentzBeforeMomentum) {
  for (int d = 2; d <= 6; ++d) {
    EXPECT_EQ(generator_count(d), d * (d + 1) / 2);
    for (int k = 0; k < generator_count(d); ++k) {
      EXPECT_EQ(generator_index(generator_at(k, d), d), k);
      if (k > 0) EXPECT_LT(generator_at(k - 1, d), generator_at(k, d));
    }
    EXPECT_FALSE(generator_at(0, d).is_momentum());
    EXPECT_TRUE(generator_at(generator_count(d) - 1, d).is_momentum());
  }
  EXPECT_THROW(generator_index(Generator::momentum(4), 4), DimensionError);
  EXPECT_EQ(Generator::lorentz(2, 0).sign, -1);
}

TEST(NormalForm, IsIdempotentAndOrdered) {
  const PoincareAlgebra alg(4);
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 60; ++trial) {
    const auto nf = alg.normal_form(random_element(alg, rng, 4));
    EXPECT_EQ(alg.normal_form(nf), nf);
    for (const auto& [word, coeff] : nf.terms())
      for (std::size_t k = 1; k < word.size(); ++k) EXPECT_LE(word[k - 1], word[k]);
  }
}

TEST(NormalForm, IndependentOfRewriteOrder) {
  for (int d : {3, 4}) {
    const PoincareAlgebra alg(d);
    std::mt19937_64 rng(100 + d), pick(5);
    for (int trial = 0; trial < 40; ++trial) {
      const auto x = random_element(alg, rng, 4);
      EXPECT_EQ(alg.normal_form_randomized(x, pick), alg.normal_form(x));
    }
  }
}

TEST(Commutator, IsSkewAndADerivation) {
  const PoincareAlgebra alg(4);
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 30; ++trial) {
    const auto a = random_element(alg, rng, 2), b = random_element(alg, rng, 2), c = random_element(alg, rng, 2);
    EXPECT_TRUE(alg.equals(alg.commutator(a, b), -alg.commutator(b, a)));
    EXPECT_TRUE(alg.equals(alg.commutator(a, b * c), alg.commutator(a, b) * c + b * alg.commutator(a, c)));
  }
}

TEST(Commutator, JacobiHoldsForRandomProducts) {
  const PoincareAlgebra alg(4);
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 15; ++trial) {
    const auto a = random_element(alg, rng, 2), b = random_element(alg, rng, 2), c = random_element(alg, rng, 1);
    const auto sum = alg.commutator(a, alg.commutator(b, c)) + alg.commutator(b, alg.commutator(c, a)) +
                     alg.commutator(c, alg.commutator(a, b));
    EXPECT_TRUE(alg.normal_form(sum).is_zero());
  }
}

TEST(Jacobi, HoldsForEveryTripleAndDetectsEverySignFlip) {
  for (int d = 2; d <= 5; ++d) {
    const PoincareAlgebra alg(d);
    const int n = alg.generator_count();
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          ASSERT_TRUE(alg.jacobi_check(generator_at(a, d), generator_at(b, d), generator_at(c, d)));
  }
  const PoincareAlgebra alg(3);
  const int n = alg.generator_count();
  for (const auto& constant : alg.structure_constants()) {
    const auto mutated = alg.with_flipped_constant(constant);
    bool violated = false;
    for (int a = 0; a < n && !violated; ++a)
      for (int b = 0; b < n && !violated; ++b)
        for (int c = 0; c < n && !violated; ++c)
          violated = !mutated.jacobi_check(generator_at(a, 3), generator_at(b, 3), generator_at(c, 3));
    EXPECT_TRUE(violated) << "flip of [" << generator_at(constant.first, 3).name() << ","
                          << generator_at(constant.second, 3).name() << "] went unnoticed";
  }
}

TEST(Localization, MassSquaredIsCentralAndCancels) {
  for (int d = 2; d <= 5; ++d) {
    const PoincareAlgebra alg(d);
    const auto m2 = alg.mass_squared();
    for (int k = 0; k < alg.generator_count(); ++k) {
      const auto g = AlgebraElement::generator(d, generator_at(k, d));
      EXPECT_TRUE(alg.commutator(m2, g).is_zero());
    }
    EXPECT_TRUE(alg.equals(m2 * alg.inverse_mass_squared(), alg.unit()));
    EXPECT_FALSE(alg.equals(alg.inverse_mass_squared(), alg.unit()));
  }
}

TEST(Localization, EqualityIgnoresRepresentation) {
  const PoincareAlgebra alg(4);
  const auto p = alg.momentum(1);
  EXPECT_TRUE(alg.equals(p, (p * alg.mass_squared()).with_denominator_power(1)));
  EXPECT_TRUE(alg.difference_witness(p, (p * alg.mass_squared()).with_denominator_power(1)).is_zero());
  EXPECT_FALSE(alg.difference_witness(p, alg.momentum(2)).is_zero());
}

TEST(Coordinate, CommutesWithMomentumAsExpected) {
  for (int d = 2; d <= 5; ++d) {
    const PoincareAlgebra alg(d);
    for (int mu = 0; mu < d; ++mu)
      for (int nu = 0; nu < d; ++nu) {
        const auto expected =
            (alg.scalar(GaussianRational(eta(mu, nu))) * alg.mass_squared() - alg.momentum(mu) * alg.momentum(nu))
                .with_denominator_power(1) *
            ParamPolynomial(I);
        EXPECT_TRUE(alg.equals(alg.commutator(alg.coordinate(mu), alg.momentum(nu)), expected));
      }
  }
}

// The coordinates close on the Lorentz generators with the opposite sign to
// +i M^-2 J; pin the relation the algebra actually satisfies.
TEST(Coordinate, SelfCommutatorIsMinusILorentzOverMassSquared) {
  for (int d = 2; d <= 5; ++d) {
    const PoincareAlgebra alg(d);
    for (int mu = 0; mu < d; ++mu)
      for (int nu = mu + 1; nu < d; ++nu) {
        const auto lhs = alg.commutator(alg.coordinate(mu), alg.coordinate(nu));
        const auto rhs = alg.lorentz(mu, nu).with_denominator_power(1) * ParamPolynomial(-I);
        EXPECT_TRUE(alg.equals(lhs, rhs)) << "d=" << d << " mu=" << mu << " nu=" << nu;
        EXPECT_FALSE(alg.equals(lhs, -rhs));
      }
  }
}

TEST(Coordinate, ContractionWithMomentumGivesDimensionFactor) {
  for (int d = 2; d <= 5; ++d) {
    const PoincareAlgebra alg(d);
    AlgebraElement contraction = alg.zero();
    for (int mu = 0; mu < d; ++mu)
      contraction += alg.commutator(alg.coordinate(mu), alg.momentum(mu)) * ParamPolynomial(eta(mu, mu));
    EXPECT_TRUE(alg.equals(contraction, alg.scalar(GaussianRational(d - 1) * I)));
  }
}

TEST(Translation, CoordinateSeriesStopsAtSecondOrder) {
  for (int d = 2; d <= 5; ++d) {
    const PoincareAlgebra alg(d);
    for (int mu = 0; mu < d; ++mu) {
      const auto series = alg.adjoint_translation_series(alg.coordinate(mu));
      EXPECT_EQ(series.vanishing_order, 2);
      EXPECT_EQ(series.value.parameter_degree(Param::Kind::Translation), 1u);
    }
  }
}

TEST(Translation, MomentumIsInvariantAndLorentzShifts) {
  const PoincareAlgebra alg(4);
  for (int mu = 0; mu < 4; ++mu) {
    const auto s = alg.adjoint_translation_series(alg.momentum(mu));
    EXPECT_EQ(s.vanishing_order, 1);
    EXPECT_TRUE(alg.equals(s.value, alg.momentum(mu)));
  }
  EXPECT_EQ(alg.adjoint_translation_series(alg.lorentz(0, 1)).vanishing_order, 2);
}

TEST(Translation, NonNilpotentSeriesIsReported) {
  const PoincareAlgebra alg(4);
  const auto x = alg.coordinate(1);
  EXPECT_THROW(alg.adjoint_translation_series(x, 1), NonNilpotentError);
}

TEST(Deformation, ShiftsCoordinateByThetaMomentum) {
  for (int d = 2; d <= 4; ++d) {
    const PoincareAlgebra alg(d);
    for (int mu = 0; mu < d; ++mu) {
      EXPECT_TRUE(alg.equals(alg.deformed_coordinate(mu), alg.coordinate(mu) + alg.theta_momentum(mu)));
      EXPECT_EQ(alg.deformed_coordinate(mu).parameter_degree(Param::Kind::Theta), 1u);
    }
  }
}

TEST(Deformation, IsLinearAndFixesMomentum) {
  const PoincareAlgebra alg(4);
  const auto x = alg.coordinate(1), y = alg.coordinate(2);
  const ParamPolynomial c = GaussianRational(3, -2);
  EXPECT_TRUE(alg.equals(alg.deform_warped(x * c + y), alg.deform_warped(x) * c + alg.deform_warped(y)));
  EXPECT_TRUE(alg.equals(alg.deform_warped(alg.momentum(2)), alg.momentum(2)));
}

TEST(Deformation, RejectsElementsCarryingTranslationParameters) {
  const PoincareAlgebra alg(4);
  EXPECT_THROW(alg.deform_warped(alg.translation_generator()), UnsupportedDeformationError);
}

TEST(Deformation, DeformedCoordinatesCloseOnThetaAndProjectedTerms) {
  const PoincareAlgebra alg(4);
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = mu + 1; nu < 4; ++nu) {
      const auto lhs = alg.commutator(alg.deformed_coordinate(mu), alg.deformed_coordinate(nu));
      const auto projected =
          (alg.theta_momentum(mu) * alg.momentum(nu) - alg.theta_momentum(nu) * alg.momentum(mu)).with_denominator_power(1);
      const auto rhs = alg.lorentz(mu, nu).with_denominator_power(1) * ParamPolynomial(-I) +
                       alg.scalar(ParamPolynomial::theta(mu, nu) * GaussianRational(0, -2)) +
                       projected * ParamPolynomial(I);
      EXPECT_TRUE(alg.equals(lhs, rhs)) << "mu=" << mu << " nu=" << nu;
    }
}

TEST(Dimensions, MixingDimensionsThrows) {
  const PoincareAlgebra a3(3), a4(4);
  EXPECT_THROW(a3.momentum(3), DimensionError);
  EXPECT_THROW(a3.momentum(1) + a4.momentum(1), DimensionError);
}
