#pragma once

#include "ncspace/algebra/poincare_algebra.hpp"
#include "ncspace/expr/ast.hpp"

#include <string>

namespace ncspace::expr {

/// Evaluates `ast` in `algebra`. Sums and products stay free (unordered);
/// only comm(...) and nf(...) normal-order their results.
algebra::AlgebraElement evaluate(const NodePtr& ast, const algebra::PoincareAlgebra& algebra);

/// Canonical text for `e` that parse() accepts and that evaluates back to an
/// element equal to `e`. One term per (parameter monomial, word) pair in
/// stored order, written coefficient*parameters*Minv2^k*generators; the
/// coefficient is always explicit, and a leading negative term is written
/// as "0 - ...".
std::string format(const algebra::AlgebraElement& e);

}  // namespace ncspace::expr
