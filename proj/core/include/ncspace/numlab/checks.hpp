#pragma once

#include "ncspace/numlab/operators.hpp"

#include <functional>
#include <string_view>
#include <vector>

namespace ncspace::numlab {

/// |<psi, A phi> - <A psi, phi>| / (|psi| |phi|) in the invariant inner product.
double hermiticity_residual(const DiscreteOperator& op, const Wavefunction& psi, const Wavefunction& phi);

/// |(A B - B A - expected) phi| / |phi|.
double commutator_residual(const DiscreteOperator& a, const DiscreteOperator& b, const DiscreteOperator& expected,
                           const Wavefunction& phi);

/// Multiplication-only right side of the coordinate-momentum relation,
/// i (eta_{mu nu} - P_mu P_nu / m^2).
DiscreteOperator xp_commutator_expected(int mu, int nu, double mass);

/// (X_mu + a_mu - (a.P / m^2) P_mu) phi. With `velocity_form` the same field is
/// assembled as a_mu - (a.P) omega^2 V_mu / m^2 after the rewrite P_mu = omega V_mu.
Wavefunction translation_expected(const std::array<double, 4>& a, int mu, const Wavefunction& phi,
                                  bool velocity_form = false);

/// |U(a) X_mu U(-a) phi - (X_mu + a_mu - (a.P/m^2) P_mu) phi| / |phi|.
double translation_covariance_residual(const std::array<double, 4>& a, int mu, const Wavefunction& phi);

/// Robertson data for X_j and P_j on a state: dX dP against
/// (1/2) |<phi, i (eta_jj - P_j P_j / m^2) phi>|. The state is normalized first.
struct UncertaintyRecord {
  double delta_x = 0.0;
  double delta_p = 0.0;
  double bound = 0.0;
  /// delta_x * delta_p - bound
  double margin = 0.0;
  /// Re <phi, X_j phi>
  double mean_x = 0.0;
};
UncertaintyRecord uncertainty_check(const Wavefunction& phi, int j);

enum class ConvergenceStatus {
  Converged,    ///< residuals decrease monotonically; slope fitted
  Floor,        ///< every residual at machine precision; slope meaningless
  Nonmonotone,  ///< residuals do not decrease under refinement; inconclusive
};
std::string_view convergence_status_name(ConvergenceStatus s);

struct ConvergencePoint {
  int points = 0;
  double h = 0.0;
  double residual = 0.0;
};

struct ConvergenceResult {
  std::vector<ConvergencePoint> points;
  /// Least-squares slope of log(residual) against log(h); NaN for Floor.
  double slope = 0.0;
  ConvergenceStatus status = ConvergenceStatus::Converged;
};

/// Residuals at or below this count as exact.
inline constexpr double kResidualFloor = 1e-11;

/// Fits raw (h, residual) data, ordered from coarse to fine.
ConvergenceResult fit_convergence(std::vector<ConvergencePoint> points);

/// Evaluates `check` on each grid and fits the result. Needs at least three
/// grids with identical pmax whose spacings halve in order; throws
/// std::invalid_argument otherwise.
ConvergenceResult convergence_order(const std::function<double(const GridSpec&)>& check,
                                    const std::vector<GridSpec>& grids);

/// {coarser, base, finer} around `base`.
std::vector<GridSpec> refinement_ladder(const GridSpec& base);

}  // namespace ncspace::numlab
