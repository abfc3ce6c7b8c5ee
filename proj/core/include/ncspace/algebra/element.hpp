#pragma once

#include "ncspace/algebra/generator.hpp"
#include "ncspace/algebra/param_polynomial.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace ncspace::algebra {

/// Ordered product of generators, stored as indices into the global generator
/// order of the element's dimension (see generator_index).
using Word = std::vector<std::uint8_t>;

/// Shorter words first, then lexicographic.
struct WordLess {
  bool operator()(const Word& a, const Word& b) const {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  }
};

/// Element of the enveloping algebra localized at M^2:
///   (sum_w coeff_w * w) * (M^2)^(-denominator_power).
///
/// Arithmetic here is free (words are concatenated, never reordered);
/// PoincareAlgebra::normal_form produces the PBW-ordered representative.
class AlgebraElement {
public:
  using Terms = std::map<Word, ParamPolynomial, WordLess>;

  /// Zero in an unspecified dimension; adopts the dimension of whatever it is
  /// combined with.
  AlgebraElement() = default;
  explicit AlgebraElement(int dimension) : dimension_(dimension) {}

  static AlgebraElement scalar(int dimension, ParamPolynomial c);
  static AlgebraElement unit(int dimension) { return scalar(dimension, 1); }
  static AlgebraElement generator(int dimension, Generator g, GaussianRational coeff = 1);
  /// Element with the given words and coefficients; zero coefficients are dropped.
  static AlgebraElement from_terms(int dimension, Terms terms, int denominator_power = 0);

  int dimension() const { return dimension_; }
  const Terms& terms() const { return terms_; }
  int denominator_power() const { return terms_.empty() ? 0 : denominator_power_; }
  bool is_zero() const { return terms_.empty(); }

  /// Same numerator, denominator power replaced.
  AlgebraElement with_denominator_power(int k) const;
  /// The numerator alone (denominator power 0).
  AlgebraElement numerator() const { return with_denominator_power(0); }
  /// Numerator multiplied on the right by (M^2)^n, unnormalized; denominator unchanged.
  AlgebraElement times_mass_squared(int n) const;

  /// Highest total degree of any coefficient in parameters of `kind`.
  unsigned parameter_degree(Param::Kind kind) const;
  /// Longest word.
  std::size_t degree() const;

  void add_term(const Word& w, const ParamPolynomial& c);

  AlgebraElement& operator+=(const AlgebraElement& o);
  AlgebraElement& operator-=(const AlgebraElement& o);
  AlgebraElement& operator*=(const ParamPolynomial& c);

  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  /// Free (concatenation) product; denominator powers add.
  friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);
  friend AlgebraElement operator*(AlgebraElement a, const ParamPolynomial& c) { return a *= c; }
  friend AlgebraElement operator*(const ParamPolynomial& c, AlgebraElement a) { return a *= c; }
  AlgebraElement operator-() const;

  /// Structural equality of the stored representation. Mathematical
  /// equality needs PoincareAlgebra::equals.
  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
    return a.terms_ == b.terms_ && a.denominator_power() == b.denominator_power();
  }

  /// Debug rendering with generator names; the canonical text form lives in expr::format.
  std::string str() const;

private:
  int dimension_ = 0;
  Terms terms_;
  int denominator_power_ = 0;

  int merged_dimension(const AlgebraElement& o) const;
};

/// P_mu P^mu as an unnormalized (but already ordered) element.
AlgebraElement mass_squared_element(int dimension);

}  // namespace ncspace::algebra
