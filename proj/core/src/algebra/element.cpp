#include "ncspace/algebra/element.hpp"

#include "ncspace/algebra/errors.hpp"

#include <algorithm>

namespace ncspace::algebra {

AlgebraElement AlgebraElement::scalar(int dimension, ParamPolynomial c) {
  AlgebraElement e(dimension);
  if (!c.is_zero()) e.terms_.emplace(Word{}, std::move(c));
  return e;
}

AlgebraElement AlgebraElement::generator(int dimension, Generator g, GaussianRational coeff) {
  AlgebraElement e(dimension);
  const auto index = static_cast<std::uint8_t>(generator_index(g, dimension));
  if (!coeff.is_zero()) e.terms_.emplace(Word{index}, ParamPolynomial(std::move(coeff)));
  return e;
}

AlgebraElement AlgebraElement::from_terms(int dimension, Terms terms, int denominator_power) {
  AlgebraElement e(dimension);
  for (auto& [w, c] : terms)
    if (!c.is_zero()) e.terms_.emplace(w, std::move(c));
  e.denominator_power_ = denominator_power;
  return e;
}

AlgebraElement AlgebraElement::with_denominator_power(int k) const {
  if (k < 0) throw std::invalid_argument("negative denominator power");
  AlgebraElement e = *this;
  e.denominator_power_ = k;
  return e;
}

AlgebraElement AlgebraElement::times_mass_squared(int n) const {
  if (n <= 0 || is_zero()) return *this;
  const AlgebraElement m2 = mass_squared_element(dimension_);
  AlgebraElement out = *this;
  for (int i = 0; i < n; ++i) out = out * m2;
  out.denominator_power_ = denominator_power_;
  return out;
}

unsigned AlgebraElement::parameter_degree(Param::Kind kind) const {
  unsigned d = 0;
  for (const auto& [w, c] : terms_) d = std::max(d, c.degree(kind));
  return d;
}

std::size_t AlgebraElement::degree() const {
  std::size_t d = 0;
  for (const auto& [w, c] : terms_) d = std::max(d, w.size());
  return d;
}

void AlgebraElement::add_term(const Word& w, const ParamPolynomial& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

int AlgebraElement::merged_dimension(const AlgebraElement& o) const {
  if (dimension_ != 0 && o.dimension_ != 0 && dimension_ != o.dimension_)
    throw DimensionError("elements of dimension " + std::to_string(dimension_) + " and " +
                         std::to_string(o.dimension_) + " combined");
  return dimension_ != 0 ? dimension_ : o.dimension_;
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
  dimension_ = merged_dimension(o);
  if (o.is_zero()) return *this;
  if (is_zero()) {
    terms_ = o.terms_;
    denominator_power_ = o.denominator_power_;
    return *this;
  }
  const int k = std::max(denominator_power_, o.denominator_power_);
  if (denominator_power_ < k) *this = times_mass_squared(k - denominator_power_).with_denominator_power(k);
  const AlgebraElement rhs = o.times_mass_squared(k - o.denominator_power_);
  for (const auto& [w, c] : rhs.terms_) add_term(w, c);
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) { return *this += -o; }

AlgebraElement& AlgebraElement::operator*=(const ParamPolynomial& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  Terms scaled;
  for (auto& [w, v] : terms_) {
    ParamPolynomial p = v * c;
    if (!p.is_zero()) scaled.emplace(w, std::move(p));
  }
  terms_ = std::move(scaled);
  return *this;
}

AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
  AlgebraElement out(a.merged_dimension(b));
  if (a.is_zero() || b.is_zero()) return out;
  for (const auto& [wa, ca] : a.terms_) {
    for (const auto& [wb, cb] : b.terms_) {
      Word w;
      w.reserve(wa.size() + wb.size());
      w.insert(w.end(), wa.begin(), wa.end());
      w.insert(w.end(), wb.begin(), wb.end());
      out.add_term(w, ca * cb);
    }
  }
  out.denominator_power_ = a.denominator_power_ + b.denominator_power_;
  return out;
}

AlgebraElement AlgebraElement::operator-() const {
  AlgebraElement out = *this;
  for (auto& [w, c] : out.terms_) c = -c;
  return out;
}

std::string AlgebraElement::str() const {
  if (is_zero()) return "0";
  std::string out;
  for (const auto& [w, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += "(" + c.str() + ")";
    for (auto g : w) out += "*" + generator_at(g, dimension_).name();
  }
  if (denominator_power() > 0) out = "Minv2^" + std::to_string(denominator_power()) + "*(" + out + ")";
  return out;
}

AlgebraElement mass_squared_element(int dimension) {
  AlgebraElement m2(dimension);
  for (int mu = 0; mu < dimension; ++mu) {
    const auto p = static_cast<std::uint8_t>(generator_index(Generator::momentum(mu), dimension));
    m2.add_term(Word{p, p}, ParamPolynomial(eta(mu, mu)));
  }
  return m2;
}

}  // namespace ncspace::algebra
