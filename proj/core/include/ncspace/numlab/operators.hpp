#pragma once

#include "ncspace/numlab/grid.hpp"

#include <array>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace ncspace::numlab {

/// Real fields that multiplication primitives may sample.
enum class FieldName { Omega, P1, P2, P3, InvOmega };

/// Operator built from multiplication by named fields, symmetric central
/// differences (zero outside the grid), complex scaling, sums and products.
/// Values are immutable and cheap to copy.
class DiscreteOperator {
public:
  static DiscreteOperator identity();
  static DiscreteOperator multiply(FieldName field);
  /// (f(p + h e_axis) - f(p - h e_axis)) / (2h), axis in {0, 1, 2} for p_1..p_3.
  static DiscreteOperator central_diff(int axis);

  /// Product: (a * b) phi = a(b(phi)).
  friend DiscreteOperator operator*(const DiscreteOperator& a, const DiscreteOperator& b);
  friend DiscreteOperator operator*(Complex c, const DiscreteOperator& a);
  friend DiscreteOperator operator+(const DiscreteOperator& a, const DiscreteOperator& b);
  friend DiscreteOperator operator-(const DiscreteOperator& a, const DiscreteOperator& b);

  Wavefunction apply(const Wavefunction& phi) const;
  /// Readable tree, e.g. "(1i * (omega . D1))".
  std::string str() const;

private:
  struct Node;
  std::shared_ptr<const Node> node_;
  explicit DiscreteOperator(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  /// out += factor * (this applied to in)
  void accumulate(const MomentumGrid& grid, const std::vector<Complex>& in, Complex factor,
                  std::vector<Complex>& out) const;
};

/// Operators with a physical meaning, all with lower spacetime indices.
/// Spatial components use the Euclidean grid coordinates p_k (k = 1..3),
/// for which the lower-index momentum is P_k = -p_k and P_0 = omega.
struct OperatorName {
  enum class Kind { Momentum, Lorentz, Coordinate, NewtonWigner, Velocity, DeformedCoordinate };
  Kind kind = Kind::Momentum;
  int mu = 0;
  int nu = 0;

  static OperatorName P(int mu) { return {Kind::Momentum, mu, 0}; }
  static OperatorName J(int mu, int nu) { return {Kind::Lorentz, mu, nu}; }
  static OperatorName X(int mu) { return {Kind::Coordinate, mu, 0}; }
  static OperatorName XNWP(int j) { return {Kind::NewtonWigner, j, 0}; }
  static OperatorName V(int mu) { return {Kind::Velocity, mu, 0}; }
  static OperatorName XTheta(int mu) { return {Kind::DeformedCoordinate, mu, 0}; }

  /// "P_0", "J_10", "X_2", "X_NWP_1", "V_3", "X_Theta_0".
  std::string str() const;
};

class UnknownOperatorError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// State not decayed near the boundary (strict mode only).
class BoundaryDecayError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Field expressions in units with hbar = c = 1 and q = grid coordinate:
///   P_0 = omega,  P_k = -q_k
///   J_k0 = i omega d_k = -J_0k,  J_ik = i (q_i d_k - q_k d_i)
///   X_0 = -(i/m^2) omega (3/2 + q.grad)
///   X_j = (i/m^2) q_j (3/2 + q.grad) + i d_j
///   X_NWP_j = i d_j - i q_j / (2 omega^2)
///   V_mu = P_mu / omega
///   X_Theta_mu = X_mu + Theta_{mu nu} eta^{nu nu} P_nu  (zero entries skipped)
/// These realize the Poincare brackets used by the symbolic engine.
DiscreteOperator build_operator(const OperatorName& name, double mass, const ThetaMatrix* theta = nullptr);

/// Lower-index four-momentum component as an operator.
DiscreteOperator momentum_operator(int mu);
/// J_{mu nu} for any index pair, zero on the diagonal.
DiscreteOperator lorentz_operator(int mu, int nu);

/// Boundary decay threshold: relative amplitude allowed within 3 stencil widths of the edge.
inline constexpr double kBoundaryDecay = 1e-8;

struct ApplyOptions {
  const ThetaMatrix* theta = nullptr;
  bool strict = false;
  /// Receives a message when the input is not decayed near the boundary.
  std::vector<std::string>* warnings = nullptr;
};

/// Checks the boundary decay of `phi`, then applies the named operator.
Wavefunction apply(const OperatorName& name, const Wavefunction& phi, const ApplyOptions& options = {});

/// Pointwise multiplication by exp(i a.P) with a.P = a_0 omega + sum_k a_k q_k
/// (a carries lower indices, so a.P = eta^{rr} a_r P_r).
Wavefunction translate(const Wavefunction& phi, const std::array<double, 4>& a);

}  // namespace ncspace::numlab
