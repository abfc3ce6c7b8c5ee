#include "ncspace/expr/eval.hpp"

#include <type_traits>
#include <vector>

namespace ncspace::expr {

using algebra::AlgebraElement;
using algebra::GaussianRational;
using algebra::ParamPolynomial;

namespace {

AlgebraElement power_of(const AlgebraElement& base, int k, const algebra::PoincareAlgebra& alg) {
  AlgebraElement out = alg.unit();
  for (int n = 0; n < k; ++n) out = out * base;
  return out;
}

/// Nonnegative magnitude rendering plus the sign that was factored out.
std::pair<int, std::string> split_sign(const GaussianRational& c) {
  using algebra::Rational;
  if (c.is_real()) return {sgn(c.real()), Rational(abs(c.real())).get_str()};
  if (sgn(c.real()) == 0) return {sgn(c.imag()), Rational(abs(c.imag())).get_str() + "i"};
  const int sign = sgn(c.real());
  const Rational re = abs(c.real());
  const Rational im = sign * c.imag();
  const std::string joiner = sgn(im) > 0 ? " + " : " - ";
  return {sign, "(" + re.get_str() + joiner + Rational(abs(im)).get_str() + "i)"};
}

}  // namespace

AlgebraElement evaluate(const NodePtr& ast, const algebra::PoincareAlgebra& alg) {
  return std::visit(
      [&](const auto& node) -> AlgebraElement {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, Scalar>) {
          return alg.scalar(node.value);
        } else if constexpr (std::is_same_v<T, ParamRef>) {
          return alg.scalar(node.kind == ParamRef::Kind::Translation ? ParamPolynomial::translation(node.i)
                                                                     : ParamPolynomial::theta(node.i, node.j));
        } else if constexpr (std::is_same_v<T, GeneratorRef>) {
          return node.kind == GeneratorRef::Kind::Momentum ? alg.momentum(node.i) : alg.lorentz(node.i, node.j);
        } else if constexpr (std::is_same_v<T, Derived>) {
          switch (node.kind) {
            case Derived::Kind::Coordinate:
              return alg.coordinate(node.index);
            case Derived::Kind::DeformedCoordinate:
              return alg.deformed_coordinate(node.index);
            case Derived::Kind::MassSquared:
              return power_of(alg.mass_squared(), node.power, alg);
            case Derived::Kind::InverseMassSquared:
              return alg.unit().with_denominator_power(node.power);
          }
          return alg.zero();
        } else if constexpr (std::is_same_v<T, NormalForm>) {
          return alg.normal_form(evaluate(node.arg, alg));
        } else {
          if (node.op == Binary::Op::Comm) return alg.commutator(evaluate(node.lhs, alg), evaluate(node.rhs, alg));
          // Long sums and products parse as left-deep chains (formatted output
          // can have thousands of terms), so walk the spine instead of recursing.
          const bool additive = node.op != Binary::Op::Mul;
          std::vector<const Binary*> spine{&node};
          for (;;) {
            const auto* next = std::get_if<Binary>(&spine.back()->lhs->value);
            if (next == nullptr || next->op == Binary::Op::Comm || (next->op != Binary::Op::Mul) != additive) break;
            spine.push_back(next);
          }
          AlgebraElement acc = evaluate(spine.back()->lhs, alg);
          for (auto it = spine.rbegin(); it != spine.rend(); ++it) {
            const AlgebraElement rhs = evaluate((*it)->rhs, alg);
            switch ((*it)->op) {
              case Binary::Op::Add:
                acc += rhs;
                break;
              case Binary::Op::Sub:
                acc -= rhs;
                break;
              default:
                acc = acc * rhs;
                break;
            }
          }
          return acc;
        }
      },
      ast->value);
}

std::string format(const AlgebraElement& e) {
  if (e.is_zero()) return "0";
  std::string out;
  const int k = e.denominator_power();
  for (const auto& [word, poly] : e.terms()) {
    for (const auto& [monomial, coeff] : poly.terms()) {
      auto [sign, text] = split_sign(coeff);
      for (const auto& [param, exponent] : monomial.factors())
        for (unsigned n = 0; n < exponent; ++n) text += "*" + param.name();
      if (k > 0) text += "*Minv2^" + std::to_string(k);
      for (auto g : word) text += "*" + algebra::generator_at(g, e.dimension()).name();

      if (out.empty())
        out = sign < 0 ? "0 - " + text : text;
      else
        out += (sign < 0 ? " - " : " + ") + text;
    }
  }
  return out;
}

}  // namespace ncspace::expr
