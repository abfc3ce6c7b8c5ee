#include "ncspace/numlab/checks.hpp"

#include <cmath>
#include <limits>

namespace ncspace::numlab {

namespace {

double eta(int mu) { return mu == 0 ? 1.0 : -1.0; }

/// Lower-index P_mu sampled at node n.
double momentum_field(const MomentumGrid& g, int mu, std::size_t n) {
  return mu == 0 ? g.omega()[n] : -g.momentum(mu - 1)[n];
}

}  // namespace

double hermiticity_residual(const DiscreteOperator& op, const Wavefunction& psi, const Wavefunction& phi) {
  require_same_grid(psi, phi);
  const Complex forward = inner_product(psi, op.apply(phi));
  const Complex backward = inner_product(op.apply(psi), phi);
  return std::abs(forward - backward) / (norm(psi) * norm(phi));
}

double commutator_residual(const DiscreteOperator& a, const DiscreteOperator& b, const DiscreteOperator& expected,
                           const Wavefunction& phi) {
  Wavefunction r = a.apply(b.apply(phi));
  r -= b.apply(a.apply(phi));
  r -= expected.apply(phi);
  return norm(r) / norm(phi);
}

DiscreteOperator xp_commutator_expected(int mu, int nu, double mass) {
  const Complex i{0.0, 1.0};
  DiscreteOperator out = Complex(0.0, -1.0 / (mass * mass)) * (momentum_operator(mu) * momentum_operator(nu));
  if (mu == nu) out = out + (i * eta(mu)) * DiscreteOperator::identity();
  return out;
}

Wavefunction translation_expected(const std::array<double, 4>& a, int mu, const Wavefunction& phi,
                                  bool velocity_form) {
  const MomentumGrid& g = *phi.grid();
  const double inv_m2 = 1.0 / (g.mass() * g.mass());
  Wavefunction out = build_operator(OperatorName::X(mu), g.mass()).apply(phi);
  for (std::size_t n = 0; n < out.size(); ++n) {
    double a_dot_p = 0.0;
    for (int r = 0; r < 4; ++r) a_dot_p += eta(r) * a[static_cast<std::size_t>(r)] * momentum_field(g, r, n);
    double field;
    if (velocity_form) {
      const double w = g.omega()[n];
      const double v = momentum_field(g, mu, n) / w;
      field = a[static_cast<std::size_t>(mu)] - a_dot_p * w * v * inv_m2;
    } else {
      field = a[static_cast<std::size_t>(mu)] - a_dot_p * momentum_field(g, mu, n) * inv_m2;
    }
    out.values()[n] += field * phi[n];
  }
  return out;
}

double translation_covariance_residual(const std::array<double, 4>& a, int mu, const Wavefunction& phi) {
  const MomentumGrid& g = *phi.grid();
  const DiscreteOperator x = build_operator(OperatorName::X(mu), g.mass());
  const std::array<double, 4> minus{-a[0], -a[1], -a[2], -a[3]};
  Wavefunction moved = translate(x.apply(translate(phi, minus)), a);
  moved -= translation_expected(a, mu, phi);
  return norm(moved) / norm(phi);
}

UncertaintyRecord uncertainty_check(const Wavefunction& state, int j) {
  if (j < 1 || j > 3) throw std::out_of_range("uncertainty check needs a spatial index");
  const Wavefunction phi = normalized(state);
  const MomentumGrid& g = *phi.grid();
  const double inv_m2 = 1.0 / (g.mass() * g.mass());

  const Wavefunction xphi = build_operator(OperatorName::X(j), g.mass()).apply(phi);
  const Wavefunction pphi = momentum_operator(j).apply(phi);

  UncertaintyRecord r;
  r.mean_x = inner_product(phi, xphi).real();
  const double mean_p = inner_product(phi, pphi).real();
  Wavefunction dx = xphi;
  dx -= Complex(r.mean_x) * phi;
  Wavefunction dp = pphi;
  dp -= Complex(mean_p) * phi;
  r.delta_x = norm(dx);
  r.delta_p = norm(dp);

  // <phi, i (eta_jj - P_j P_j / m^2) phi>, a pure multiplication expectation
  Complex expectation = 0.0;
  const auto& p = g.momentum(j - 1);
  const auto& w = g.weight();
  for (std::size_t n = 0; n < phi.size(); ++n)
    expectation += std::norm(phi[n]) * w[n] * Complex(0.0, -1.0 - p[n] * p[n] * inv_m2);
  r.bound = 0.5 * std::abs(expectation);
  r.margin = r.delta_x * r.delta_p - r.bound;
  return r;
}

std::string_view convergence_status_name(ConvergenceStatus s) {
  switch (s) {
    case ConvergenceStatus::Converged:
      return "converged";
    case ConvergenceStatus::Floor:
      return "floor";
    case ConvergenceStatus::Nonmonotone:
      return "nonmonotone";
  }
  return "?";
}

ConvergenceResult fit_convergence(std::vector<ConvergencePoint> points) {
  ConvergenceResult out;
  out.points = std::move(points);
  bool at_floor = true;
  for (const auto& p : out.points) at_floor = at_floor && p.residual <= kResidualFloor;
  if (at_floor) {
    out.status = ConvergenceStatus::Floor;
    out.slope = std::numeric_limits<double>::quiet_NaN();
    return out;
  }

  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = static_cast<double>(out.points.size());
  for (const auto& p : out.points) {
    const double x = std::log(p.h);
    const double y = std::log(std::max(p.residual, std::numeric_limits<double>::min()));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  out.slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);

  out.status = ConvergenceStatus::Converged;
  for (std::size_t k = 1; k < out.points.size(); ++k)
    if (!(out.points[k].residual < out.points[k - 1].residual)) out.status = ConvergenceStatus::Nonmonotone;
  return out;
}

ConvergenceResult convergence_order(const std::function<double(const GridSpec&)>& check,
                                    const std::vector<GridSpec>& grids) {
  if (grids.size() < 3) throw std::invalid_argument("convergence study needs at least three grids");
  for (std::size_t k = 1; k < grids.size(); ++k) {
    if (grids[k].pmax != grids[0].pmax) throw std::invalid_argument("convergence grids must share pmax");
    const double ratio = grids[k - 1].spacing() / grids[k].spacing();
    if (std::abs(ratio - 2.0) > 1e-9) throw std::invalid_argument("convergence grids must halve the spacing");
  }
  std::vector<ConvergencePoint> points;
  for (const auto& g : grids) points.push_back({g.points, g.spacing(), check(g)});
  return fit_convergence(std::move(points));
}

std::vector<GridSpec> refinement_ladder(const GridSpec& base) { return {base.coarser(), base, base.finer()}; }

}  // namespace ncspace::numlab
