#include "ncspace/verify/catalog.hpp"

#include <array>
#include <chrono>
#include <future>

namespace ncspace::verify {

using algebra::AlgebraElement;
using algebra::eta;
using algebra::GaussianRational;
using algebra::ParamPolynomial;
using algebra::PoincareAlgebra;

namespace {

struct Entry {
  IdentityId id;
  std::string_view name;
  std::string_view reference;
};

constexpr std::array<Entry, 11> kEntries{{
    {IdentityId::PoincareJacobi, "POINCARE_JACOBI",
     "consistency oracle: Jacobi identity for every generator triple"},
    {IdentityId::XPCommutator, "X_P_COMMUTATOR", "[X_mu, P_nu] = i (eta_mu_nu - M^-2 P_mu P_nu)"},
    {IdentityId::JXCovariance, "J_X_COVARIANCE", "[J_rs, X_mu] = i (eta_mu_r X_s - eta_mu_s X_r)"},
    {IdentityId::XXSnyder, "X_X_SNYDER", "[X_mu, X_nu] = i M^-2 J_mu_nu"},
    {IdentityId::MassCasimir, "MASS_CASIMIR", "M^2 commutes with X_mu, P_mu and J_mu_nu"},
    {IdentityId::TranslationAdjointX, "TRANSLATION_ADJOINT_X",
     "U(a) X_mu U(a)^-1 = X_mu + a_mu - M^-2 (a.P) P_mu"},
    {IdentityId::SnyderTranslationCovariance, "SNYDER_TRANSLATION_COVARIANCE",
     "[U X_mu U^-1, U X_nu U^-1] = U (i M^-2 J_mu_nu) U^-1"},
    {IdentityId::DeformedX, "DEFORMED_X", "warped X_mu = X_mu + (Theta P)_mu"},
    {IdentityId::DeformedCommutator, "DEFORMED_COMMUTATOR",
     "[XT_mu, XT_nu] = i M^-2 J_mu_nu - 2i Theta_mu_nu - 2i M^-2 ((Theta P)_mu P_nu - (Theta P)_nu P_mu)"},
    {IdentityId::DeformedTranslationCovariance, "DEFORMED_TRANSLATION_COVARIANCE",
     "[U XT_mu U^-1, U XT_nu U^-1] = [XT_mu, XT_nu] + i M^-2 (a_nu P_mu - a_mu P_nu)"},
    {IdentityId::DeformedLorentzInfinitesimal, "DEFORMED_LORENTZ_INFINITESIMAL",
     "[J_rs, XT_mu] = i (eta_mu_r XT_s - eta_mu_s XT_r) - (dTheta P)_mu with Theta rotated by J_rs"},
}};

const Entry& entry(IdentityId id) {
  for (const auto& e : kEntries)
    if (e.id == id) return e;
  throw UnknownIdentityError("unknown identity");
}

std::string label(std::initializer_list<std::pair<const char*, int>> indices) {
  std::string out;
  for (const auto& [name, value] : indices) {
    if (!out.empty()) out += ",";
    out += std::string(name) + "=" + std::to_string(value);
  }
  return out;
}

ParamPolynomial imag(long re_num, long den = 1) { return GaussianRational::fraction(re_num, den, true); }

/// Elements shared by several identities, built once per verification.
struct Builders {
  const PoincareAlgebra& alg;
  int d;
  std::vector<AlgebraElement> x, xt;

  explicit Builders(const PoincareAlgebra& a, bool deformed) : alg(a), d(a.dimension()) {
    for (int mu = 0; mu < d; ++mu) x.push_back(alg.coordinate(mu));
    if (deformed)
      for (int mu = 0; mu < d; ++mu) xt.push_back(alg.deform_warped(x[static_cast<std::size_t>(mu)]));
  }

  const AlgebraElement& X(int mu) const { return x[static_cast<std::size_t>(mu)]; }
  const AlgebraElement& XT(int mu) const { return xt[static_cast<std::size_t>(mu)]; }
  AlgebraElement minv2(const AlgebraElement& e) const {
    return e.with_denominator_power(e.denominator_power() + 1);
  }
};

bool needs_deformation(IdentityId id) {
  return id == IdentityId::DeformedX || id == IdentityId::DeformedCommutator ||
         id == IdentityId::DeformedTranslationCovariance || id == IdentityId::DeformedLorentzInfinitesimal;
}

}  // namespace

std::string_view status_name(Status s) {
  switch (s) {
    case Status::Pass:
      return "pass";
    case Status::Fail:
      return "fail";
    case Status::Unverified:
      break;
  }
  return "unverified";
}

const std::vector<IdentityId>& catalog() {
  static const std::vector<IdentityId> ids = [] {
    std::vector<IdentityId> out;
    for (const auto& e : kEntries) out.push_back(e.id);
    return out;
  }();
  return ids;
}

std::string_view identity_name(IdentityId id) { return entry(id).name; }
std::string_view identity_reference(IdentityId id) { return entry(id).reference; }

IdentityId identity_from_name(std::string_view name) {
  for (const auto& e : kEntries)
    if (e.name == name) return e.id;
  throw UnknownIdentityError("unknown identity '" + std::string(name) + "'");
}

void for_each_case(IdentityId id, const PoincareAlgebra& alg, const std::function<bool(IdentityCase)>& visit) {
  const int d = alg.dimension();
  const int n = alg.generator_count();
  const AlgebraElement zero = alg.zero();

  if (id == IdentityId::PoincareJacobi) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c) {
          const auto ga = AlgebraElement::generator(d, algebra::generator_at(a, d));
          const auto gb = AlgebraElement::generator(d, algebra::generator_at(b, d));
          const auto gc = AlgebraElement::generator(d, algebra::generator_at(c, d));
          AlgebraElement sum = alg.commutator(alg.commutator(ga, gb), gc) +
                               alg.commutator(alg.commutator(gb, gc), ga) +
                               alg.commutator(alg.commutator(gc, ga), gb);
          if (!visit({label({{"a", a}, {"b", b}, {"c", c}}), std::move(sum), zero})) return;
        }
    return;
  }

  const Builders B(alg, needs_deformation(id));
  const AlgebraElement M2 = alg.mass_squared();

  switch (id) {
    case IdentityId::PoincareJacobi:
      return;

    case IdentityId::XPCommutator:
      for (int mu = 0; mu < d; ++mu)
        for (int nu = 0; nu < d; ++nu) {
          AlgebraElement lhs = alg.commutator(B.X(mu), alg.momentum(nu));
          AlgebraElement rhs = alg.scalar(imag(eta(mu, nu))) -
                               B.minv2(alg.momentum(mu) * alg.momentum(nu)) * imag(1);
          if (!visit({label({{"mu", mu}, {"nu", nu}}), std::move(lhs), std::move(rhs)})) return;
        }
      return;

    case IdentityId::JXCovariance:
      for (int r = 0; r < d; ++r)
        for (int s = r + 1; s < d; ++s)
          for (int mu = 0; mu < d; ++mu) {
            AlgebraElement lhs = alg.commutator(alg.lorentz(r, s), B.X(mu));
            AlgebraElement rhs = (B.X(s) * ParamPolynomial(eta(mu, r)) - B.X(r) * ParamPolynomial(eta(mu, s))) * imag(1);
            if (!visit({label({{"rho", r}, {"sigma", s}, {"mu", mu}}), std::move(lhs), std::move(rhs)})) return;
          }
      return;

    case IdentityId::XXSnyder:
      for (int mu = 0; mu < d; ++mu)
        for (int nu = 0; nu < d; ++nu) {
          AlgebraElement lhs = alg.commutator(B.X(mu), B.X(nu));
          AlgebraElement rhs = B.minv2(alg.lorentz(mu, nu)) * imag(1);
          if (!visit({label({{"mu", mu}, {"nu", nu}}), std::move(lhs), std::move(rhs)})) return;
        }
      return;

    case IdentityId::MassCasimir:
      for (int mu = 0; mu < d; ++mu) {
        if (!visit({"X," + label({{"mu", mu}}), alg.commutator(M2, B.X(mu)), zero})) return;
        if (!visit({"P," + label({{"mu", mu}}), alg.commutator(M2, alg.momentum(mu)), zero})) return;
      }
      for (int mu = 0; mu < d; ++mu)
        for (int nu = mu + 1; nu < d; ++nu)
          if (!visit({"J," + label({{"mu", mu}, {"nu", nu}}), alg.commutator(M2, alg.lorentz(mu, nu)), zero})) return;
      return;

    case IdentityId::TranslationAdjointX: {
      const AlgebraElement aP = alg.translation_generator();
      for (int mu = 0; mu < d; ++mu) {
        AlgebraElement lhs = alg.adjoint_translation(B.X(mu));
        AlgebraElement rhs = B.X(mu) + alg.scalar(ParamPolynomial::translation(mu)) - B.minv2(aP * alg.momentum(mu));
        if (!visit({label({{"mu", mu}}), std::move(lhs), std::move(rhs)})) return;
      }
      return;
    }

    case IdentityId::SnyderTranslationCovariance: {
      std::vector<AlgebraElement> moved;
      for (int mu = 0; mu < d; ++mu) moved.push_back(alg.adjoint_translation(B.X(mu)));
      for (int mu = 0; mu < d; ++mu)
        for (int nu = 0; nu < d; ++nu) {
          AlgebraElement lhs = alg.commutator(moved[static_cast<std::size_t>(mu)], moved[static_cast<std::size_t>(nu)]);
          AlgebraElement rhs = alg.adjoint_translation(B.minv2(alg.lorentz(mu, nu)) * imag(1));
          if (!visit({label({{"mu", mu}, {"nu", nu}}), std::move(lhs), std::move(rhs)})) return;
        }
      return;
    }

    case IdentityId::DeformedX:
      for (int mu = 0; mu < d; ++mu) {
        AlgebraElement rhs = B.X(mu) + alg.theta_momentum(mu);
        if (!visit({label({{"mu", mu}}), B.XT(mu), std::move(rhs)})) return;
      }
      return;

    case IdentityId::DeformedCommutator:
      for (int mu = 0; mu < d; ++mu)
        for (int nu = 0; nu < d; ++nu) {
          AlgebraElement lhs = alg.commutator(B.XT(mu), B.XT(nu));
          const AlgebraElement cross =
              alg.theta_momentum(mu) * alg.momentum(nu) - alg.theta_momentum(nu) * alg.momentum(mu);
          AlgebraElement rhs = B.minv2(alg.lorentz(mu, nu)) * imag(1) +
                               alg.scalar(ParamPolynomial::theta(mu, nu) * imag(-2)) +
                               B.minv2(cross) * imag(-2);
          if (!visit({label({{"mu", mu}, {"nu", nu}}), std::move(lhs), std::move(rhs)})) return;
        }
      return;

    case IdentityId::DeformedTranslationCovariance: {
      std::vector<AlgebraElement> moved;
      for (int mu = 0; mu < d; ++mu) moved.push_back(alg.adjoint_translation(B.XT(mu)));
      for (int mu = 0; mu < d; ++mu)
        for (int nu = 0; nu < d; ++nu) {
          AlgebraElement lhs = alg.commutator(moved[static_cast<std::size_t>(mu)], moved[static_cast<std::size_t>(nu)]);
          const AlgebraElement correction =
              ParamPolynomial::translation(nu) * alg.momentum(mu) - ParamPolynomial::translation(mu) * alg.momentum(nu);
          AlgebraElement rhs = alg.commutator(B.XT(mu), B.XT(nu)) + B.minv2(correction) * imag(1);
          if (!visit({label({{"mu", mu}, {"nu", nu}}), std::move(lhs), std::move(rhs)})) return;
        }
      return;
    }

    case IdentityId::DeformedLorentzInfinitesimal:
      for (int r = 0; r < d; ++r)
        for (int s = r + 1; s < d; ++s)
          for (int mu = 0; mu < d; ++mu) {
            AlgebraElement lhs = alg.commutator(alg.lorentz(r, s), B.XT(mu));
            AlgebraElement rhs = (B.XT(s) * ParamPolynomial(eta(mu, r)) - B.XT(r) * ParamPolynomial(eta(mu, s))) * imag(1);
            // First-order change of Theta under J_rs, contracted with P:
            // dTheta_{mu l} = i (eta_{mu r} Theta_{s l} - eta_{mu s} Theta_{r l}
            //                    + eta_{l r} Theta_{mu s} - eta_{l s} Theta_{mu r})
            for (int l = 0; l < d; ++l) {
              ParamPolynomial dtheta = ParamPolynomial(eta(mu, r)) * ParamPolynomial::theta(s, l) -
                                       ParamPolynomial(eta(mu, s)) * ParamPolynomial::theta(r, l) +
                                       ParamPolynomial(eta(l, r)) * ParamPolynomial::theta(mu, s) -
                                       ParamPolynomial(eta(l, s)) * ParamPolynomial::theta(mu, r);
              rhs -= alg.momentum(l) * (dtheta * imag(eta(l, l)));
            }
            if (!visit({label({{"rho", r}, {"sigma", s}, {"mu", mu}}), std::move(lhs), std::move(rhs)})) return;
          }
      return;
  }
}

std::vector<IdentityCase> cases(IdentityId id, const PoincareAlgebra& alg) {
  std::vector<IdentityCase> out;
  for_each_case(id, alg, [&](IdentityCase c) {
    out.push_back(std::move(c));
    return true;
  });
  return out;
}

IdentityRecord verify(IdentityId id, const PoincareAlgebra& alg) {
  const auto start = std::chrono::steady_clock::now();
  IdentityRecord record;
  record.id = id;
  record.dimension = alg.dimension();
  record.status = Status::Pass;
  for_each_case(id, alg, [&](IdentityCase c) {
    ++record.cases_checked;
    AlgebraElement witness = alg.difference_witness(c.lhs, c.rhs);
    if (witness.is_zero()) return true;
    record.status = Status::Fail;
    record.failing_case = std::move(c.label);
    record.lhs = alg.normal_form(c.lhs);
    record.rhs = alg.normal_form(c.rhs);
    record.witness = std::move(witness);
    return false;
  });
  record.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return record;
}

IdentityRecord verify(IdentityId id, int d) {
  if (d < 2) throw std::invalid_argument("dimension must be at least 2");
  return verify(id, PoincareAlgebra(d));
}

std::vector<IdentityRecord> verify_all(const PoincareAlgebra& alg) {
  std::vector<std::future<IdentityRecord>> pending;
  for (IdentityId id : catalog())
    pending.push_back(std::async(std::launch::async, [&alg, id] { return verify(id, alg); }));
  std::vector<IdentityRecord> out;
  for (auto& f : pending) out.push_back(f.get());
  return out;
}

std::vector<IdentityRecord> verify_all(int d) {
  if (d < 2) throw std::invalid_argument("dimension must be at least 2");
  const PoincareAlgebra alg(d);
  return verify_all(alg);
}

}  // namespace ncspace::verify
