#pragma once

#include "ncspace/algebra/scalar.hpp"

#include <cstddef>
#include <memory>
#include <variant>

namespace ncspace::expr {

struct Node;
using NodePtr = std::shared_ptr<const Node>;

/// Gaussian-rational literal such as 3/2 or 1i.
struct Scalar {
  algebra::GaussianRational value;
};

/// a[i] (second index unused) or th[i,j], indices as written.
struct ParamRef {
  enum class Kind { Translation, Theta };
  Kind kind = Kind::Translation;
  int i = 0;
  int j = 0;
};

/// P[i] or J[i,j], indices as written (J[j,i] and J[i,i] are normalized on evaluation).
struct GeneratorRef {
  enum class Kind { Momentum, Lorentz };
  Kind kind = Kind::Momentum;
  int i = 0;
  int j = 0;
};

/// Builders that expand to composite elements: X[mu], XT[mu], M2^k, Minv2^k.
struct Derived {
  enum class Kind { Coordinate, DeformedCoordinate, MassSquared, InverseMassSquared };
  Kind kind = Kind::Coordinate;
  int index = 0;
  int power = 1;
};

struct NormalForm {
  NodePtr arg;
};

struct Binary {
  enum class Op { Add, Sub, Mul, Comm };
  Op op = Op::Add;
  NodePtr lhs;
  NodePtr rhs;
};

struct Node {
  std::variant<Scalar, ParamRef, GeneratorRef, Derived, NormalForm, Binary> value;
  /// 0-based byte offset of the first character of this node in the source.
  std::size_t offset = 0;
};

template <class T>
NodePtr make_node(T value, std::size_t offset = 0) {
  return std::make_shared<const Node>(Node{std::move(value), offset});
}

}  // namespace ncspace::expr
