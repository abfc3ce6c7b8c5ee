#pragma once

#include <stdexcept>

namespace ncspace::algebra {

/// An index is outside the configured spacetime dimension, or elements of
/// different dimensions were combined.
class DimensionError : public std::out_of_range {
public:
  using std::out_of_range::out_of_range;
};

/// The translation series did not vanish within the requested order.
class NonNilpotentError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// The element's translation adjoint action is not affine in the translation
/// parameters, so the closed-form deformation does not apply.
class UnsupportedDeformationError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace ncspace::algebra
