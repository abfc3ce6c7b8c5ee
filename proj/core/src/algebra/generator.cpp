#include "ncspace/algebra/generator.hpp"

#include "ncspace/algebra/errors.hpp"

namespace ncspace::algebra {

namespace {

void check_index(int index, const char* what) {
  if (index < 0 || index > 255) throw DimensionError(std::string(what) + " index out of range");
}

}  // namespace

Generator Generator::momentum(int mu) {
  check_index(mu, "momentum");
  return {GeneratorKind::Momentum, static_cast<std::uint8_t>(mu), 0};
}

SignedGenerator Generator::lorentz(int mu, int nu) {
  check_index(mu, "Lorentz");
  check_index(nu, "Lorentz");
  if (mu == nu) throw DimensionError("J needs two distinct indices");
  if (mu < nu)
    return {{GeneratorKind::Lorentz, static_cast<std::uint8_t>(mu), static_cast<std::uint8_t>(nu)}, 1};
  return {{GeneratorKind::Lorentz, static_cast<std::uint8_t>(nu), static_cast<std::uint8_t>(mu)}, -1};
}

std::string Generator::name() const {
  if (is_momentum()) return "P[" + std::to_string(mu) + "]";
  return "J[" + std::to_string(mu) + "," + std::to_string(nu) + "]";
}

int generator_index(Generator g, int dim) {
  if (g.is_momentum()) {
    if (g.mu >= dim) throw DimensionError("momentum index " + std::to_string(g.mu) + " >= dimension");
    return dim * (dim - 1) / 2 + g.mu;
  }
  if (g.nu >= dim || g.mu >= g.nu)
    throw DimensionError("Lorentz index pair (" + std::to_string(g.mu) + "," + std::to_string(g.nu) +
                         ") invalid for dimension " + std::to_string(dim));
  // pairs (mu, nu) with mu < nu, lexicographic
  int index = 0;
  for (int a = 0; a < g.mu; ++a) index += dim - 1 - a;
  return index + (g.nu - g.mu - 1);
}

Generator generator_at(int index, int dim) {
  const int lorentz_count = dim * (dim - 1) / 2;
  if (index < 0 || index >= lorentz_count + dim) throw DimensionError("generator index out of range");
  if (index >= lorentz_count) return Generator::momentum(index - lorentz_count);
  for (int a = 0; a < dim; ++a) {
    const int row = dim - 1 - a;
    if (index < row) return Generator::lorentz(a, a + 1 + index).generator;
    index -= row;
  }
  throw DimensionError("generator index out of range");
}

}  // namespace ncspace::algebra
