#pragma once

#include "ncspace/algebra/scalar.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace ncspace::algebra {

/// A formal scalar parameter: a translation component a[i], or a deformation
/// matrix entry th[i,j] stored with i < j.
struct Param {
  enum class Kind : std::uint8_t { Translation, Theta };

  Kind kind = Kind::Translation;
  std::uint8_t i = 0;
  std::uint8_t j = 0;

  static Param translation(int index);
  /// Requires i < j; use ParamPolynomial::theta for the skew-symmetric extension.
  static Param theta(int i, int j);

  std::string name() const;  // "a[2]", "th[0,1]"

  friend auto operator<=>(const Param&, const Param&) = default;
};

/// Product of parameters with positive exponents, sorted by parameter.
class ParamMonomial {
public:
  ParamMonomial() = default;
  explicit ParamMonomial(Param p, unsigned exponent = 1);

  const std::vector<std::pair<Param, unsigned>>& factors() const { return factors_; }
  bool empty() const { return factors_.empty(); }
  unsigned degree() const;
  unsigned degree(Param::Kind kind) const;
  /// Exponent of `p`, zero when absent.
  unsigned exponent(Param p) const;
  /// This monomial with every factor of `kind` removed.
  ParamMonomial without(Param::Kind kind) const;

  friend ParamMonomial operator*(const ParamMonomial& a, const ParamMonomial& b);
  friend bool operator==(const ParamMonomial&, const ParamMonomial&) = default;

  /// Graded lexicographic order: lower total degree first.
  friend bool operator<(const ParamMonomial& a, const ParamMonomial& b);

private:
  std::vector<std::pair<Param, unsigned>> factors_;
};

/// Exact multivariate polynomial over the Gaussian rationals in the formal
/// parameters a[mu] and th[mu,nu]. Never stores zero coefficients.
class ParamPolynomial {
public:
  using Terms = std::map<ParamMonomial, GaussianRational>;

  ParamPolynomial() = default;
  ParamPolynomial(GaussianRational c);  // NOLINT(google-explicit-constructor)
  ParamPolynomial(long c) : ParamPolynomial(GaussianRational(c)) {}  // NOLINT(google-explicit-constructor)

  static ParamPolynomial translation(int index);
  /// th[i,j] extended by skew-symmetry: th[i,i] = 0, th[j,i] = -th[i,j].
  static ParamPolynomial theta(int i, int j);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Constant term (zero when absent).
  GaussianRational constant() const;
  unsigned degree(Param::Kind kind) const;

  /// Coefficient of the monomial `m`, zero when absent.
  GaussianRational coefficient(const ParamMonomial& m) const;

  ParamPolynomial& operator+=(const ParamPolynomial& o);
  ParamPolynomial& operator-=(const ParamPolynomial& o);
  ParamPolynomial& operator*=(const ParamPolynomial& o);
  ParamPolynomial& operator*=(const GaussianRational& c);
  /// Adds c * m.
  void add_term(const ParamMonomial& m, const GaussianRational& c);

  friend ParamPolynomial operator+(ParamPolynomial a, const ParamPolynomial& b) { return a += b; }
  friend ParamPolynomial operator-(ParamPolynomial a, const ParamPolynomial& b) { return a -= b; }
  friend ParamPolynomial operator*(const ParamPolynomial& a, const ParamPolynomial& b);
  ParamPolynomial operator-() const;

  friend bool operator==(const ParamPolynomial&, const ParamPolynomial&) = default;

  std::string str() const;

private:
  Terms terms_;
};

}  // namespace ncspace::algebra
