#include "ncspace/numlab/grid.hpp"

#include <algorithm>
#include <cmath>

namespace ncspace::numlab {

void GridSpec::validate() const {
  if (points < 9 || points % 2 == 0)
    throw std::invalid_argument("grid needs an odd number of points >= 9, got " + std::to_string(points));
  if (!(pmax > 0.0)) throw std::invalid_argument("pmax must be positive");
  if (!(mass > 0.0)) throw std::invalid_argument("mass must be positive");
}

MomentumGrid::MomentumGrid(GridSpec spec) : spec_(spec) {
  spec_.validate();
  h_ = spec_.spacing();
  const auto n = static_cast<std::size_t>(spec_.points);
  size_ = n * n * n;
  for (auto& axis : p_) axis.resize(size_);
  omega_.resize(size_);
  weight_.resize(size_);
  const double m2 = spec_.mass * spec_.mass;
  const double cell = h_ * h_ * h_;
  std::size_t idx = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k, ++idx) {
        const double x = coordinate(static_cast<int>(i));
        const double y = coordinate(static_cast<int>(j));
        const double z = coordinate(static_cast<int>(k));
        p_[0][idx] = x;
        p_[1][idx] = y;
        p_[2][idx] = z;
        omega_[idx] = std::sqrt(m2 + x * x + y * y + z * z);
        weight_[idx] = cell / (2.0 * omega_[idx]);
      }
}

std::shared_ptr<const MomentumGrid> MomentumGrid::make(GridSpec spec) {
  return std::make_shared<const MomentumGrid>(spec);
}

std::size_t MomentumGrid::stride(int axis) const {
  const auto n = static_cast<std::size_t>(spec_.points);
  switch (axis) {
    case 0:
      return n * n;
    case 1:
      return n;
    case 2:
      return 1;
    default:
      throw std::out_of_range("axis must be 0, 1 or 2");
  }
}

int MomentumGrid::axis_index(std::size_t n, int axis) const {
  return static_cast<int>((n / stride(axis)) % static_cast<std::size_t>(spec_.points));
}

Wavefunction::Wavefunction(GridPtr grid) : grid_(std::move(grid)), values_(grid_->size()) {}

Wavefunction::Wavefunction(GridPtr grid, std::vector<Complex> values)
    : grid_(std::move(grid)), values_(std::move(values)) {
  if (values_.size() != grid_->size()) throw GridMismatchError("value count does not match grid size");
}

Wavefunction& Wavefunction::operator+=(const Wavefunction& o) {
  require_same_grid(*this, o);
  for (std::size_t n = 0; n < values_.size(); ++n) values_[n] += o.values_[n];
  return *this;
}

Wavefunction& Wavefunction::operator-=(const Wavefunction& o) {
  require_same_grid(*this, o);
  for (std::size_t n = 0; n < values_.size(); ++n) values_[n] -= o.values_[n];
  return *this;
}

Wavefunction& Wavefunction::operator*=(Complex c) {
  for (auto& v : values_) v *= c;
  return *this;
}

double Wavefunction::boundary_ratio(int layers) const {
  const int n = grid_->points();
  double peak = 0.0;
  double edge = 0.0;
  for (std::size_t idx = 0; idx < values_.size(); ++idx) {
    const double a = std::abs(values_[idx]);
    peak = std::max(peak, a);
    for (int axis = 0; axis < 3; ++axis) {
      const int i = grid_->axis_index(idx, axis);
      if (i < layers || i >= n - layers) {
        edge = std::max(edge, a);
        break;
      }
    }
  }
  return peak > 0.0 ? edge / peak : 0.0;
}

void require_same_grid(const Wavefunction& a, const Wavefunction& b) {
  if (!a.grid() || !b.grid() || (a.grid() != b.grid() && a.grid()->spec() != b.grid()->spec()))
    throw GridMismatchError("states live on different grids");
}

Complex inner_product(const Wavefunction& psi, const Wavefunction& phi) {
  require_same_grid(psi, phi);
  const auto& w = psi.grid()->weight();
  Complex sum = 0.0;
  for (std::size_t n = 0; n < w.size(); ++n) sum += std::conj(psi[n]) * phi[n] * w[n];
  return sum;
}

double norm(const Wavefunction& phi) { return std::sqrt(std::max(0.0, inner_product(phi, phi).real())); }

Wavefunction normalized(const Wavefunction& phi) {
  const double nrm = norm(phi);
  if (nrm == 0.0) throw std::domain_error("cannot normalize the zero state");
  return Complex(1.0 / nrm) * phi;
}

Wavefunction gaussian_state(const GridPtr& grid, const Vec3& center, double width) {
  const double pmax = grid->spec().pmax;
  if (!(width > 0.0)) throw SupportError("Gaussian width must be positive");
  for (double c : center)
    if (!(std::abs(c) < pmax)) throw SupportError("Gaussian center lies outside the grid");
  if (5.0 * width > 2.0 * pmax) throw SupportError("Gaussian 5-width window does not fit in the grid");

  Wavefunction out(grid);
  const double inv = 1.0 / (2.0 * width * width);
  const auto& px = grid->momentum(0);
  const auto& py = grid->momentum(1);
  const auto& pz = grid->momentum(2);
  for (std::size_t n = 0; n < out.size(); ++n) {
    const double dx = px[n] - center[0], dy = py[n] - center[1], dz = pz[n] - center[2];
    out.values()[n] = std::exp(-(dx * dx + dy * dy + dz * dz) * inv);
  }
  return out;
}

ThetaMatrix& ThetaMatrix::set(int mu, int nu, double value) {
  if (mu < 0 || nu < 0 || mu > 3 || nu > 3) throw std::out_of_range("Theta index out of range");
  if (mu == nu) {
    if (value != 0.0) throw std::invalid_argument("Theta diagonal must vanish");
    return *this;
  }
  m_[static_cast<std::size_t>(mu)][static_cast<std::size_t>(nu)] = value;
  m_[static_cast<std::size_t>(nu)][static_cast<std::size_t>(mu)] = -value;
  return *this;
}

ThetaMatrix ThetaMatrix::scaled(double factor) const {
  ThetaMatrix out = *this;
  for (auto& row : out.m_)
    for (auto& v : row) v *= factor;
  return out;
}

bool ThetaMatrix::is_zero() const {
  for (const auto& row : m_)
    for (double v : row)
      if (v != 0.0) return false;
  return true;
}

}  // namespace ncspace::numlab
