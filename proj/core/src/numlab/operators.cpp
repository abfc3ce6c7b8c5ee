#include "ncspace/numlab/operators.hpp"

#include <cmath>

namespace ncspace::numlab {

namespace {

constexpr Complex kI{0.0, 1.0};

const char* field_name(FieldName f) {
  switch (f) {
    case FieldName::Omega:
      return "omega";
    case FieldName::P1:
      return "p1";
    case FieldName::P2:
      return "p2";
    case FieldName::P3:
      return "p3";
    case FieldName::InvOmega:
      return "1/omega";
  }
  return "?";
}

FieldName momentum_field(int axis) {
  static constexpr FieldName fields[] = {FieldName::P1, FieldName::P2, FieldName::P3};
  return fields[axis];
}

void check_spatial(int j) {
  if (j < 1 || j > 3) throw UnknownOperatorError("spatial index must be 1, 2 or 3");
}

void check_spacetime(int mu) {
  if (mu < 0 || mu > 3) throw UnknownOperatorError("spacetime index must be 0..3");
}

std::string format_complex(Complex c) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "(%g%+gi)", c.real(), c.imag());
  return buf;
}

}  // namespace

struct DiscreteOperator::Node {
  enum class Kind { Identity, Multiply, Diff, Scale, Sum, Product };
  Kind kind = Kind::Identity;
  FieldName field = FieldName::Omega;
  int axis = 0;
  Complex factor = 1.0;
  std::shared_ptr<const Node> a, b;
};

DiscreteOperator DiscreteOperator::identity() { return DiscreteOperator(std::make_shared<const Node>()); }

DiscreteOperator DiscreteOperator::multiply(FieldName field) {
  Node n;
  n.kind = Node::Kind::Multiply;
  n.field = field;
  return DiscreteOperator(std::make_shared<const Node>(n));
}

DiscreteOperator DiscreteOperator::central_diff(int axis) {
  if (axis < 0 || axis > 2) throw std::out_of_range("difference axis must be 0, 1 or 2");
  Node n;
  n.kind = Node::Kind::Diff;
  n.axis = axis;
  return DiscreteOperator(std::make_shared<const Node>(n));
}

DiscreteOperator operator*(const DiscreteOperator& a, const DiscreteOperator& b) {
  DiscreteOperator::Node n;
  n.kind = DiscreteOperator::Node::Kind::Product;
  n.a = a.node_;
  n.b = b.node_;
  return DiscreteOperator(std::make_shared<const DiscreteOperator::Node>(n));
}

DiscreteOperator operator*(Complex c, const DiscreteOperator& a) {
  DiscreteOperator::Node n;
  n.kind = DiscreteOperator::Node::Kind::Scale;
  n.factor = c;
  n.a = a.node_;
  return DiscreteOperator(std::make_shared<const DiscreteOperator::Node>(n));
}

DiscreteOperator operator+(const DiscreteOperator& a, const DiscreteOperator& b) {
  DiscreteOperator::Node n;
  n.kind = DiscreteOperator::Node::Kind::Sum;
  n.a = a.node_;
  n.b = b.node_;
  return DiscreteOperator(std::make_shared<const DiscreteOperator::Node>(n));
}

DiscreteOperator operator-(const DiscreteOperator& a, const DiscreteOperator& b) { return a + Complex(-1.0) * b; }

namespace {

const std::vector<double>* field_values(const MomentumGrid& grid, FieldName f) {
  switch (f) {
    case FieldName::Omega:
      return &grid.omega();
    case FieldName::P1:
      return &grid.momentum(0);
    case FieldName::P2:
      return &grid.momentum(1);
    case FieldName::P3:
      return &grid.momentum(2);
    case FieldName::InvOmega:
      return nullptr;
  }
  return nullptr;
}

/// out[n] += factor * field[n] * (D_axis in)[n]; a null field means 1.
void accumulate_diff(const MomentumGrid& grid, int axis, const std::vector<Complex>& in, Complex factor,
                     const std::vector<double>* field, std::vector<Complex>& out) {
  const auto n = static_cast<std::size_t>(grid.points());
  const std::size_t s = grid.stride(axis);
  const Complex f = factor / (2.0 * grid.spacing());
  // Walk every grid line parallel to `axis`.
  const std::size_t lines = n * n;
  for (std::size_t line = 0; line < lines; ++line) {
    std::size_t base;
    if (axis == 0) {
      base = line;  // (j, k) -> j * n + k
    } else if (axis == 1) {
      base = (line / n) * n * n + (line % n);
    } else {
      base = line * n;
    }
    for (std::size_t k = 0; k < n; ++k) {
      const std::size_t idx = base + k * s;
      const Complex up = k + 1 < n ? in[idx + s] : Complex(0.0);
      const Complex down = k > 0 ? in[idx - s] : Complex(0.0);
      const Complex d = (up - down) * f;
      out[idx] += field != nullptr ? d * (*field)[idx] : d;
    }
  }
}

}  // namespace

void DiscreteOperator::accumulate(const MomentumGrid& grid, const std::vector<Complex>& in, Complex factor,
                                  std::vector<Complex>& out) const {
  const Node& n = *node_;
  switch (n.kind) {
    case Node::Kind::Identity:
      for (std::size_t i = 0; i < out.size(); ++i) out[i] += factor * in[i];
      return;
    case Node::Kind::Multiply: {
      const auto* field = field_values(grid, n.field);
      if (field == nullptr) {
        for (std::size_t i = 0; i < out.size(); ++i) out[i] += factor * in[i] / grid.omega()[i];
      } else {
        for (std::size_t i = 0; i < out.size(); ++i) out[i] += factor * in[i] * (*field)[i];
      }
      return;
    }
    case Node::Kind::Diff:
      accumulate_diff(grid, n.axis, in, factor, nullptr, out);
      return;
    case Node::Kind::Scale:
      DiscreteOperator(n.a).accumulate(grid, in, factor * n.factor, out);
      return;
    case Node::Kind::Sum:
      DiscreteOperator(n.a).accumulate(grid, in, factor, out);
      DiscreteOperator(n.b).accumulate(grid, in, factor, out);
      return;
    case Node::Kind::Product: {
      const Node& a = *n.a;
      const Node& b = *n.b;
      // field * D fused without a temporary
      if (a.kind == Node::Kind::Multiply && b.kind == Node::Kind::Diff && a.field != FieldName::InvOmega) {
        accumulate_diff(grid, b.axis, in, factor, field_values(grid, a.field), out);
        return;
      }
      std::vector<Complex> tmp(in.size());
      DiscreteOperator(n.b).accumulate(grid, in, 1.0, tmp);
      DiscreteOperator(n.a).accumulate(grid, tmp, factor, out);
      return;
    }
  }
}

Wavefunction DiscreteOperator::apply(const Wavefunction& phi) const {
  Wavefunction out(phi.grid());
  accumulate(*phi.grid(), phi.values(), 1.0, out.values());
  return out;
}

std::string DiscreteOperator::str() const {
  const Node& n = *node_;
  switch (n.kind) {
    case Node::Kind::Identity:
      return "1";
    case Node::Kind::Multiply:
      return field_name(n.field);
    case Node::Kind::Diff:
      return "D" + std::to_string(n.axis + 1);
    case Node::Kind::Scale:
      return "(" + format_complex(n.factor) + " * " + DiscreteOperator(n.a).str() + ")";
    case Node::Kind::Sum:
      return "(" + DiscreteOperator(n.a).str() + " + " + DiscreteOperator(n.b).str() + ")";
    case Node::Kind::Product:
      return "(" + DiscreteOperator(n.a).str() + " . " + DiscreteOperator(n.b).str() + ")";
  }
  return "?";
}

std::string OperatorName::str() const {
  switch (kind) {
    case Kind::Momentum:
      return "P_" + std::to_string(mu);
    case Kind::Lorentz:
      return "J_" + std::to_string(mu) + std::to_string(nu);
    case Kind::Coordinate:
      return "X_" + std::to_string(mu);
    case Kind::NewtonWigner:
      return "X_NWP_" + std::to_string(mu);
    case Kind::Velocity:
      return "V_" + std::to_string(mu);
    case Kind::DeformedCoordinate:
      return "X_Theta_" + std::to_string(mu);
  }
  return "?";
}

DiscreteOperator momentum_operator(int mu) {
  check_spacetime(mu);
  if (mu == 0) return DiscreteOperator::multiply(FieldName::Omega);
  return Complex(-1.0) * DiscreteOperator::multiply(momentum_field(mu - 1));
}

DiscreteOperator lorentz_operator(int mu, int nu) {
  check_spacetime(mu);
  check_spacetime(nu);
  if (mu == nu) return Complex(0.0) * DiscreteOperator::identity();
  if (nu == 0) return kI * (DiscreteOperator::multiply(FieldName::Omega) * DiscreteOperator::central_diff(mu - 1));
  if (mu == 0) return Complex(-1.0) * lorentz_operator(nu, 0);
  return kI * (DiscreteOperator::multiply(momentum_field(mu - 1)) * DiscreteOperator::central_diff(nu - 1) -
               DiscreteOperator::multiply(momentum_field(nu - 1)) * DiscreteOperator::central_diff(mu - 1));
}

namespace {

/// 3/2 + q.grad
DiscreteOperator dilation() {
  DiscreteOperator out = Complex(1.5) * DiscreteOperator::identity();
  for (int k = 0; k < 3; ++k)
    out = out + DiscreteOperator::multiply(momentum_field(k)) * DiscreteOperator::central_diff(k);
  return out;
}

DiscreteOperator coordinate(int mu, double mass) {
  check_spacetime(mu);
  const double inv_m2 = 1.0 / (mass * mass);
  if (mu == 0) return Complex(0.0, -inv_m2) * (DiscreteOperator::multiply(FieldName::Omega) * dilation());
  return Complex(0.0, inv_m2) * (DiscreteOperator::multiply(momentum_field(mu - 1)) * dilation()) +
         kI * DiscreteOperator::central_diff(mu - 1);
}

}  // namespace

DiscreteOperator build_operator(const OperatorName& name, double mass, const ThetaMatrix* theta) {
  if (!(mass > 0.0)) throw std::invalid_argument("mass must be positive");
  switch (name.kind) {
    case OperatorName::Kind::Momentum:
      return momentum_operator(name.mu);
    case OperatorName::Kind::Lorentz:
      return lorentz_operator(name.mu, name.nu);
    case OperatorName::Kind::Coordinate:
      return coordinate(name.mu, mass);
    case OperatorName::Kind::NewtonWigner: {
      check_spatial(name.mu);
      const auto inv = DiscreteOperator::multiply(FieldName::InvOmega);
      return kI * DiscreteOperator::central_diff(name.mu - 1) -
             Complex(0.0, 0.5) * (DiscreteOperator::multiply(momentum_field(name.mu - 1)) * (inv * inv));
    }
    case OperatorName::Kind::Velocity:
      check_spacetime(name.mu);
      if (name.mu == 0) return DiscreteOperator::identity();
      return momentum_operator(name.mu) * DiscreteOperator::multiply(FieldName::InvOmega);
    case OperatorName::Kind::DeformedCoordinate: {
      if (theta == nullptr) throw std::invalid_argument("X_Theta needs a Theta matrix");
      DiscreteOperator out = coordinate(name.mu, mass);
      for (int nu = 0; nu < 4; ++nu) {
        const double t = (*theta)(name.mu, nu);
        if (t == 0.0) continue;
        const double eta = nu == 0 ? 1.0 : -1.0;
        out = out + Complex(t * eta) * momentum_operator(nu);
      }
      return out;
    }
  }
  throw UnknownOperatorError("unknown operator");
}

Wavefunction apply(const OperatorName& name, const Wavefunction& phi, const ApplyOptions& options) {
  const DiscreteOperator op = build_operator(name, phi.grid()->mass(), options.theta);
  const double ratio = phi.boundary_ratio(3);
  if (ratio > kBoundaryDecay) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "%s: state amplitude %.3g (relative) within 3 nodes of the boundary exceeds %.0e",
                  name.str().c_str(), ratio, kBoundaryDecay);
    if (options.strict) throw BoundaryDecayError(buf);
    if (options.warnings != nullptr) options.warnings->emplace_back(buf);
  }
  return op.apply(phi);
}

Wavefunction translate(const Wavefunction& phi, const std::array<double, 4>& a) {
  const MomentumGrid& grid = *phi.grid();
  Wavefunction out = phi;
  for (std::size_t n = 0; n < out.size(); ++n) {
    const double phase = a[0] * grid.omega()[n] + a[1] * grid.momentum(0)[n] + a[2] * grid.momentum(1)[n] +
                         a[3] * grid.momentum(2)[n];
    out.values()[n] *= std::polar(1.0, phase);
  }
  return out;
}

}  // namespace ncspace::numlab
