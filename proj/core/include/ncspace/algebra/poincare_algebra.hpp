#pragma once

#include "ncspace/algebra/element.hpp"

#include <memory>
#include <random>
#include <utility>
#include <vector>

namespace ncspace::algebra {

/// One structure constant: the coefficient of `result` in [first, second],
/// with first < second in generator order.
struct StructureConstant {
  int first = 0;
  int second = 0;
  int result = 0;
  GaussianRational value;
};

/// Result of summing the translation series, together with the order k at
/// which the k-th nested commutator first vanished.
struct TranslationSeries {
  AlgebraElement value;
  int vanishing_order = 0;
};

/// The Poincaré enveloping algebra in `dimension` spacetime dimensions,
/// localized at the central element M^2 = P_mu P^mu.
///
/// Brackets:
///   [P_mu, P_nu]            = 0
///   [J_rs, P_mu]            = i (eta_{mu r} P_s - eta_{mu s} P_r)
///   [J_mn, J_rs]            = i (eta_{mr} J_ns - eta_{ms} J_nr - eta_{nr} J_ms + eta_{ns} J_mr)
///
/// Instances are immutable apart from an internal, thread-safe memo of
/// normal-ordered words, so one algebra can be shared across threads.
class PoincareAlgebra {
public:
  explicit PoincareAlgebra(int dimension = 4);

  int dimension() const { return dimension_; }
  int generator_count() const { return generator_count_; }

  // -- builders ------------------------------------------------------------
  AlgebraElement zero() const { return AlgebraElement(dimension_); }
  AlgebraElement unit() const { return AlgebraElement::unit(dimension_); }
  AlgebraElement scalar(ParamPolynomial c) const { return AlgebraElement::scalar(dimension_, std::move(c)); }
  AlgebraElement momentum(int mu) const;
  /// J_{mu nu}; zero for mu == nu, sign-adjusted for mu > nu.
  AlgebraElement lorentz(int mu, int nu) const;
  /// M^2 = P_mu P^mu in normal form.
  AlgebraElement mass_squared() const;
  /// (M^2)^(-1).
  AlgebraElement inverse_mass_squared() const { return unit().with_denominator_power(1); }
  /// X_mu = (1/2) M^-2 (J_{mu nu} P^nu + P^nu J_{mu nu}) in normal form.
  AlgebraElement coordinate(int mu) const;
  /// a.P = a^rho P_rho with formal parameters a[rho] (lower index).
  AlgebraElement translation_generator() const;
  /// (Theta P)_mu = Theta_mu^nu P_nu with formal parameters th[.,.].
  AlgebraElement theta_momentum(int mu) const;
  /// Deformed coordinate X^Theta_mu.
  AlgebraElement deformed_coordinate(int mu) const { return deform_warped(coordinate(mu)); }

  // -- algebra -------------------------------------------------------------
  /// [g1, g2] as a linear combination of generators.
  AlgebraElement structure_commutator(Generator g1, Generator g2) const;
  /// PBW representative; idempotent.
  AlgebraElement normal_form(const AlgebraElement& x) const;
  /// Same result as normal_form, reached by rewriting a randomly chosen
  /// out-of-order pair at every step and without the memo.
  AlgebraElement normal_form_randomized(const AlgebraElement& x, std::mt19937_64& rng) const;
  AlgebraElement commutator(const AlgebraElement& a, const AlgebraElement& b) const;
  /// Equality after clearing the central denominators.
  bool equals(const AlgebraElement& a, const AlgebraElement& b) const;
  /// Normal form of numer(a) (M^2)^(K-ka) - numer(b) (M^2)^(K-kb), K = max(ka, kb).
  /// Zero exactly when equals(a, b).
  AlgebraElement difference_witness(const AlgebraElement& a, const AlgebraElement& b) const;

  // -- translations and deformation ----------------------------------------
  /// U(a) x U(a)^-1 = sum_k i^k/k! ad_{a.P}^k(x) with U(a) = exp(+i a.P).
  /// Throws NonNilpotentError if the k-th term is still nonzero at k = max_order.
  TranslationSeries adjoint_translation_series(const AlgebraElement& x, int max_order = 8) const;
  AlgebraElement adjoint_translation(const AlgebraElement& x, int max_order = 8) const {
    return adjoint_translation_series(x, max_order).value;
  }
  /// Warped-convolution deformation for elements whose translation adjoint
  /// action is affine in a: the a-linear part is resolved by a_lambda -> (Theta P)_lambda.
  /// Throws UnsupportedDeformationError otherwise.
  AlgebraElement deform_warped(const AlgebraElement& x) const;

  bool jacobi_check(Generator g1, Generator g2, Generator g3) const;

  // -- structure constants -------------------------------------------------
  std::vector<StructureConstant> structure_constants() const;
  /// Copy of this algebra with one structure constant negated in both
  /// [first, second] and [second, first]. Used for mutation testing.
  PoincareAlgebra with_flipped_constant(const StructureConstant& c) const;

private:
  struct LinearTerm {
    std::uint8_t generator;
    GaussianRational coeff;
  };
  using ScalarTerms = std::vector<std::pair<Word, GaussianRational>>;
  struct Memo;

  int dimension_;
  int generator_count_;
  // brackets_[a * generator_count_ + b] = [g_a, g_b]
  std::vector<std::vector<LinearTerm>> brackets_;
  std::shared_ptr<Memo> memo_;

  const std::vector<LinearTerm>& bracket(int a, int b) const {
    return brackets_[static_cast<std::size_t>(a * generator_count_ + b)];
  }
  std::shared_ptr<const ScalarTerms> normal_order_word(const Word& w) const;
  AlgebraElement substitute_translation(const AlgebraElement& x) const;
};

}  // namespace ncspace::algebra
