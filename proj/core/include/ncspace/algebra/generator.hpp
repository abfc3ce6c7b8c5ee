#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace ncspace::algebra {

/// Minkowski metric diag(+1, -1, ..., -1).
constexpr int eta(int mu, int nu) { return mu != nu ? 0 : (mu == 0 ? 1 : -1); }

/// Lorentz components come first so that the PBW order puts momenta rightmost.
enum class GeneratorKind : std::uint8_t { Lorentz, Momentum };

struct SignedGenerator;

/// A basis element of the Poincaré algebra: P_mu, or J_{mu nu} with mu < nu.
/// The defaulted comparison is the global PBW generator order.
struct Generator {
  GeneratorKind kind = GeneratorKind::Momentum;
  std::uint8_t mu = 0;
  std::uint8_t nu = 0;

  static Generator momentum(int mu);
  /// J_{mu nu} for mu != nu; (nu, mu) with nu > mu comes back as J_{mu nu} with sign -1.
  static SignedGenerator lorentz(int mu, int nu);

  bool is_momentum() const { return kind == GeneratorKind::Momentum; }
  /// "P[1]", "J[0,2]".
  std::string name() const;

  friend auto operator<=>(const Generator&, const Generator&) = default;
};

struct SignedGenerator {
  Generator generator;
  int sign = 1;
};

/// Number of generators of the algebra in `dim` spacetime dimensions.
constexpr int generator_count(int dim) { return dim * (dim - 1) / 2 + dim; }

/// Position of `g` in the global generator order for dimension `dim`.
/// Throws DimensionError when an index is >= dim.
int generator_index(Generator g, int dim);
Generator generator_at(int index, int dim);

}  // namespace ncspace::algebra
