#pragma once

#include <array>
#include <complex>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace ncspace::numlab {

using Complex = std::complex<double>;
using Vec3 = std::array<double, 3>;

/// Uniform cubic momentum grid [-pmax, pmax]^3 with an odd number of points
/// per axis, so p = 0 is a node.
struct GridSpec {
  int points = 65;
  double pmax = 6.0;
  double mass = 1.0;

  double spacing() const { return 2.0 * pmax / (points - 1); }
  /// Throws std::invalid_argument unless points >= 9 is odd and pmax, mass > 0.
  void validate() const;
  /// Grid with twice (or half) the spacing and the same extent.
  GridSpec coarser() const { return {(points - 1) / 2 + 1, pmax, mass}; }
  GridSpec finer() const { return {2 * (points - 1) + 1, pmax, mass}; }

  friend bool operator==(const GridSpec&, const GridSpec&) = default;
};

class GridMismatchError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Test state too close to the edge of the grid.
class SupportError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Node coordinates and the mass-shell fields sampled on them. Node (i, j, k)
/// is stored at (i * N + j) * N + k; axis 0 varies slowest.
class MomentumGrid {
public:
  explicit MomentumGrid(GridSpec spec);
  static std::shared_ptr<const MomentumGrid> make(GridSpec spec);

  const GridSpec& spec() const { return spec_; }
  int points() const { return spec_.points; }
  double spacing() const { return h_; }
  double mass() const { return spec_.mass; }
  std::size_t size() const { return size_; }

  /// Coordinate of index i along any axis.
  double coordinate(int i) const { return -spec_.pmax + i * h_; }
  /// Euclidean momentum component p_axis at every node.
  const std::vector<double>& momentum(int axis) const { return p_[static_cast<std::size_t>(axis)]; }
  /// omega = sqrt(m^2 + |p|^2) at every node.
  const std::vector<double>& omega() const { return omega_; }
  /// Invariant-measure weight h^3 / (2 omega) at every node.
  const std::vector<double>& weight() const { return weight_; }
  /// Stride between neighbours along `axis`.
  std::size_t stride(int axis) const;
  /// Index of the node along `axis` for flat position n.
  int axis_index(std::size_t n, int axis) const;

private:
  GridSpec spec_;
  double h_;
  std::size_t size_;
  std::array<std::vector<double>, 3> p_;
  std::vector<double> omega_;
  std::vector<double> weight_;
};

using GridPtr = std::shared_ptr<const MomentumGrid>;

/// Complex samples of a one-particle state on a grid.
class Wavefunction {
public:
  Wavefunction() = default;
  explicit Wavefunction(GridPtr grid);
  Wavefunction(GridPtr grid, std::vector<Complex> values);

  const GridPtr& grid() const { return grid_; }
  const std::vector<Complex>& values() const { return values_; }
  std::vector<Complex>& values() { return values_; }
  std::size_t size() const { return values_.size(); }
  Complex operator[](std::size_t n) const { return values_[n]; }

  Wavefunction& operator+=(const Wavefunction& o);
  Wavefunction& operator-=(const Wavefunction& o);
  Wavefunction& operator*=(Complex c);
  friend Wavefunction operator+(Wavefunction a, const Wavefunction& b) { return a += b; }
  friend Wavefunction operator-(Wavefunction a, const Wavefunction& b) { return a -= b; }
  friend Wavefunction operator*(Complex c, Wavefunction a) { return a *= c; }

  /// Largest |value| within `layers` nodes of the boundary, relative to the
  /// largest |value| anywhere (0 for the zero state).
  double boundary_ratio(int layers = 3) const;

private:
  GridPtr grid_;
  std::vector<Complex> values_;
};

/// Throws GridMismatchError unless both states live on the same grid.
void require_same_grid(const Wavefunction& a, const Wavefunction& b);

/// sum conj(psi) phi h^3 / (2 omega).
Complex inner_product(const Wavefunction& psi, const Wavefunction& phi);
double norm(const Wavefunction& phi);
Wavefunction normalized(const Wavefunction& phi);

/// exp(-|p - center|^2 / (2 width^2)), unnormalized.
/// Requires the center inside the grid and a 5-width window that fits in the
/// grid extent (5 width <= 2 pmax); throws SupportError otherwise.
Wavefunction gaussian_state(const GridPtr& grid, const Vec3& center, double width);

/// Constant skew-symmetric 4x4 matrix built from its six upper entries.
class ThetaMatrix {
public:
  ThetaMatrix() = default;
  /// Sets Theta_{mu nu} = value and Theta_{nu mu} = -value.
  ThetaMatrix& set(int mu, int nu, double value);
  double operator()(int mu, int nu) const { return m_[static_cast<std::size_t>(mu)][static_cast<std::size_t>(nu)]; }
  ThetaMatrix scaled(double factor) const;
  bool is_zero() const;

private:
  std::array<std::array<double, 4>, 4> m_{};
};

}  // namespace ncspace::numlab
