#include "ncspace/numlab/suite.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <random>

namespace ncspace::numlab {

namespace {

constexpr Complex kI{0.0, 1.0};
constexpr double kHermiticityTolerance = 1e-3;
constexpr double kCommutatorTolerance = 1e-2;

std::string two(int a, int b) { return std::to_string(a) + std::to_string(b); }

/// Records (or, in strict mode, raises) a boundary-decay problem of `phi`.
void check_decay(const CheckContext& ctx, const Wavefunction& phi, const std::string& what) {
  const double ratio = phi.boundary_ratio(3);
  if (ratio <= kBoundaryDecay) return;
  char buf[200];
  std::snprintf(buf, sizeof buf, "%s on N=%d: relative amplitude %.2e within 3 nodes of the boundary (limit %.0e)",
                what.c_str(), ctx.grid->points(), ratio, kBoundaryDecay);
  if (ctx.strict) throw BoundaryDecayError(buf);
  if (ctx.warnings != nullptr) ctx.warnings->emplace_back(buf);
}

ThetaMatrix reference_theta() {
  ThetaMatrix theta;
  theta.set(0, 1, 0.1).set(1, 2, 0.1);
  return theta;
}

/// Diagonal entry of the metric.
double eta(int mu) { return mu == 0 ? 1.0 : -1.0; }

/// Right side of the deformed coordinate commutator in the form
/// i J/m^2 - 2i Theta - (2i/m^2) ((Theta P)_mu P_nu - (Theta P)_nu P_mu).
DiscreteOperator deformed_commutator_expected(int mu, int nu, const ThetaMatrix& theta, double mass) {
  const double inv_m2 = 1.0 / (mass * mass);
  auto theta_p = [&](int row) {
    DiscreteOperator out = Complex(0.0) * DiscreteOperator::identity();
    for (int l = 0; l < 4; ++l)
      if (theta(row, l) != 0.0) out = out + Complex(theta(row, l) * eta(l)) * momentum_operator(l);
    return out;
  };
  return Complex(0.0, inv_m2) * lorentz_operator(mu, nu) +
         Complex(0.0, -2.0 * theta(mu, nu)) * DiscreteOperator::identity() +
         Complex(0.0, -2.0 * inv_m2) *
             (theta_p(mu) * momentum_operator(nu) - theta_p(nu) * momentum_operator(mu));
}

/// (X_j - X_NWP_j) phi minus (i q_j / 2m^2)(3 + m^2/omega^2 + 2 q.grad) phi with
/// the gradient of the Gaussian taken analytically.
double nwp_remainder_residual(const Wavefunction& phi, int j, const Vec3& center, double width) {
  const MomentumGrid& g = *phi.grid();
  const double m2 = g.mass() * g.mass();
  Wavefunction diff = build_operator(OperatorName::X(j), g.mass()).apply(phi);
  diff -= build_operator(OperatorName::XNWP(j), g.mass()).apply(phi);
  const double inv_w2 = 1.0 / (width * width);
  for (std::size_t n = 0; n < phi.size(); ++n) {
    double q_dot_grad = 0.0;  // (q.grad phi) / phi
    for (int k = 0; k < 3; ++k) {
      const double q = g.momentum(k)[n];
      q_dot_grad += -q * (q - center[static_cast<std::size_t>(k)]) * inv_w2;
    }
    const double w = g.omega()[n];
    const double qj = g.momentum(j - 1)[n];
    diff.values()[n] -= Complex(0.0, qj / (2.0 * m2)) * (3.0 + m2 / (w * w) + 2.0 * q_dot_grad) * phi[n];
  }
  return norm(diff) / norm(phi);
}

constexpr Vec3 kProbeCenter{0.3, -0.2, 0.1};

}  // namespace

GridPtr GridCache::get(const GridSpec& spec) {
  auto it = grids_.find(spec.points);
  if (it != grids_.end() && it->second->spec() == spec) return it->second;
  GridPtr g = MomentumGrid::make(spec);
  grids_[spec.points] = g;
  return g;
}

std::pair<Wavefunction, Wavefunction> hermiticity_pair(const GridPtr& grid) {
  const double m = grid->mass();
  return {gaussian_state(grid, {0.6 * m, -0.3 * m, 0.45 * m}, m),
          gaussian_state(grid, {-0.4 * m, 0.5 * m, -0.15 * m}, m)};
}

Wavefunction probe_state(const GridPtr& grid) {
  const double m = grid->mass();
  return gaussian_state(grid, {kProbeCenter[0] * m, kProbeCenter[1] * m, kProbeCenter[2] * m}, m);
}

std::vector<NumericCheck> numeric_catalog(const NumericConfig& config) {
  std::vector<NumericCheck> out;
  const double herm_tol = config.tolerance.value_or(kHermiticityTolerance);
  const double comm_tol = config.tolerance.value_or(kCommutatorTolerance);

  auto hermiticity = [&](OperatorName name) {
    out.push_back({"HERMITICITY_" + name.str(), "hermiticity of " + name.str() + " in the invariant measure",
                   NumericKind::Convergence, herm_tol, [name](const CheckContext& ctx) {
                     auto [psi, phi] = hermiticity_pair(ctx.grid);
                     check_decay(ctx, psi, "hermiticity state psi");
                     check_decay(ctx, phi, "hermiticity state phi");
                     return hermiticity_residual(build_operator(name, ctx.grid->mass()), psi, phi);
                   }});
  };
  for (int mu = 0; mu < 4; ++mu) hermiticity(OperatorName::X(mu));
  for (int j = 1; j < 4; ++j) hermiticity(OperatorName::J(j, 0));
  for (int i = 1; i < 4; ++i)
    for (int k = i + 1; k < 4; ++k) hermiticity(OperatorName::J(i, k));

  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu)
      out.push_back({"COMMUTATOR_X_P_" + two(mu, nu), "[X_mu, P_nu] = i (eta_mu_nu - P_mu P_nu / m^2)",
                     NumericKind::Convergence, comm_tol, [mu, nu](const CheckContext& ctx) {
                       const Wavefunction phi = probe_state(ctx.grid);
                       check_decay(ctx, phi, "probe state");
                       const double m = ctx.grid->mass();
                       return commutator_residual(build_operator(OperatorName::X(mu), m), momentum_operator(nu),
                                                  xp_commutator_expected(mu, nu, m), phi);
                     }});

  for (int mu = 0; mu < 4; ++mu)
    for (int nu = mu + 1; nu < 4; ++nu)
      out.push_back({"COMMUTATOR_X_X_" + two(mu, nu), "[X_mu, X_nu] = (i/m^2) J_mu_nu", NumericKind::Convergence,
                     comm_tol, [mu, nu](const CheckContext& ctx) {
                       const Wavefunction phi = probe_state(ctx.grid);
                       check_decay(ctx, phi, "probe state");
                       const double m = ctx.grid->mass();
                       return commutator_residual(build_operator(OperatorName::X(mu), m),
                                                  build_operator(OperatorName::X(nu), m),
                                                  Complex(0.0, 1.0 / (m * m)) * lorentz_operator(mu, nu), phi);
                     }});

  for (int mu = 0; mu < 4; ++mu)
    for (int nu = mu + 1; nu < 4; ++nu)
      out.push_back({"COMMUTATOR_XT_XT_" + two(mu, nu),
                     "[XT_mu, XT_nu] = (i/m^2) J - 2i Theta - (2i/m^2)((Theta P)_mu P_nu - (Theta P)_nu P_mu), "
                     "Theta_01 = Theta_12 = 0.1",
                     NumericKind::Convergence, comm_tol, [mu, nu](const CheckContext& ctx) {
                       const Wavefunction phi = probe_state(ctx.grid);
                       check_decay(ctx, phi, "probe state");
                       const double m = ctx.grid->mass();
                       const ThetaMatrix theta = reference_theta();
                       return commutator_residual(build_operator(OperatorName::XTheta(mu), m, &theta),
                                                  build_operator(OperatorName::XTheta(nu), m, &theta),
                                                  deformed_commutator_expected(mu, nu, theta, m), phi);
                     }});

  for (int mu = 0; mu < 4; ++mu)
    out.push_back({"TRANSLATION_X_" + std::to_string(mu),
                   "U(a) X_mu U(-a) = X_mu + a_mu - (a.P/m^2) P_mu, a = (0.3, 0.2, 0, 0.1)",
                   NumericKind::Convergence, comm_tol, [mu](const CheckContext& ctx) {
                     const Wavefunction phi = probe_state(ctx.grid);
                     check_decay(ctx, phi, "probe state");
                     return translation_covariance_residual({0.3, 0.2, 0.0, 0.1}, mu, phi);
                   }});

  for (int j = 1; j < 4; ++j)
    out.push_back({"NWP_REMAINDER_" + std::to_string(j),
                   "X_j - X_NWP_j = (i p_j / 2m^2)(3 + m^2/omega^2 + 2 p.grad)", NumericKind::Convergence, comm_tol,
                   [j](const CheckContext& ctx) {
                     const Wavefunction phi = probe_state(ctx.grid);
                     check_decay(ctx, phi, "probe state");
                     const double m = ctx.grid->mass();
                     const Vec3 c{kProbeCenter[0] * m, kProbeCenter[1] * m, kProbeCenter[2] * m};
                     return nwp_remainder_residual(phi, j, c, m);
                   }});

  for (int i = 1; i < 4; ++i)
    for (int k = i + 1; k < 4; ++k)
      out.push_back({"ROTATION_SYMMETRY_J_" + two(i, k), "J_ik annihilates a rotation-invariant state",
                     NumericKind::Convergence, comm_tol, [i, k](const CheckContext& ctx) {
                       const Wavefunction phi = gaussian_state(ctx.grid, {0.0, 0.0, 0.0}, ctx.grid->mass());
                       check_decay(ctx, phi, "centered state");
                       return norm(lorentz_operator(i, k).apply(phi)) / norm(phi);
                     }});

  // Randomized Robertson states: widths in [m/2, 2m], centers in the inner third.
  std::mt19937_64 rng(config.seed);
  const double m = config.grid.mass;
  const double third = config.grid.pmax / 3.0;
  std::uniform_real_distribution<double> center(-third, third);
  std::uniform_real_distribution<double> width(0.5 * m, 2.0 * m);
  for (int s = 0; s < 10; ++s) {
    const Vec3 c{center(rng), center(rng), center(rng)};
    const double w = width(rng);
    char ref[160];
    std::snprintf(ref, sizeof ref, "dX_j dP_j >= |<[X_j, P_j]>|/2, Gaussian center (%.3f, %.3f, %.3f), width %.3f",
                  c[0], c[1], c[2], w);
    out.push_back({"UNCERTAINTY_" + std::to_string(s), ref, NumericKind::Bound, kMarginSlack,
                   [c, w](const CheckContext& ctx) {
                     const Wavefunction phi = gaussian_state(ctx.grid, c, w);
                     check_decay(ctx, phi, "uncertainty state");
                     double margin = std::numeric_limits<double>::infinity();
                     for (int j = 1; j < 4; ++j) margin = std::min(margin, uncertainty_check(phi, j).margin);
                     return margin;
                   }});
  }
  return out;
}

NumericRecord run_check(const NumericCheck& check, const NumericConfig& config, GridCache& cache) {
  const auto start = std::chrono::steady_clock::now();
  NumericRecord rec;
  rec.id = check.id;
  rec.reference = check.reference;
  rec.kind = check.kind;
  rec.tolerance = check.tolerance;

  auto evaluate_on = [&](const GridSpec& spec) {
    CheckContext ctx{cache.get(spec), &rec.warnings, config.strict};
    return check.evaluate(ctx);
  };

  if (check.kind == NumericKind::Bound) {
    const double margin = evaluate_on(config.grid);
    rec.grids.push_back({config.grid.points, config.grid.spacing(), margin});
    rec.slope = std::numeric_limits<double>::quiet_NaN();
    rec.pass = margin >= check.tolerance;
    if (!rec.pass) rec.note = "margin below slack";
  } else {
    const std::vector<GridSpec> ladder = refinement_ladder(config.grid);
    const ConvergenceResult fit = convergence_order(evaluate_on, ladder);
    rec.grids = fit.points;
    rec.slope = fit.slope;
    rec.convergence = fit.status;
    const double at_config = rec.grids[1].residual;
    const bool within = at_config <= check.tolerance;
    switch (fit.status) {
      case ConvergenceStatus::Floor:
        rec.pass = true;
        rec.note = "exact at machine precision on every grid";
        break;
      case ConvergenceStatus::Nonmonotone:
        rec.pass = false;
        rec.note = "residual does not decrease under refinement";
        break;
      case ConvergenceStatus::Converged: {
        const bool order_ok = fit.slope >= kMinSlope && fit.slope <= kMaxSlope;
        rec.pass = within && order_ok;
        if (!within && !order_ok) rec.note = "residual above tolerance and order outside [1.6, 2.4]";
        else if (!within) rec.note = "residual above tolerance";
        else if (!order_ok) rec.note = "order outside [1.6, 2.4]";
        break;
      }
    }
    if (fit.status == ConvergenceStatus::Nonmonotone && !within) rec.note += "; residual above tolerance";
  }

  std::sort(rec.warnings.begin(), rec.warnings.end());
  rec.warnings.erase(std::unique(rec.warnings.begin(), rec.warnings.end()), rec.warnings.end());
  rec.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rec;
}

std::vector<NumericRecord> run_numeric_suite(const NumericConfig& config) {
  config.grid.validate();
  GridCache cache;
  std::vector<NumericRecord> out;
  for (const auto& check : numeric_catalog(config)) out.push_back(run_check(check, config, cache));
  return out;
}

}  // namespace ncspace::numlab
