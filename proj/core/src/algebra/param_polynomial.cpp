#include "ncspace/algebra/param_polynomial.hpp"

#include "ncspace/algebra/errors.hpp"

#include <algorithm>

namespace ncspace::algebra {

Param Param::translation(int index) {
  if (index < 0 || index > 255) throw DimensionError("translation index out of range");
  return {Kind::Translation, static_cast<std::uint8_t>(index), 0};
}

Param Param::theta(int i, int j) {
  if (i < 0 || j > 255 || i >= j) throw DimensionError("theta parameter needs 0 <= i < j");
  return {Kind::Theta, static_cast<std::uint8_t>(i), static_cast<std::uint8_t>(j)};
}

std::string Param::name() const {
  if (kind == Kind::Translation) return "a[" + std::to_string(i) + "]";
  return "th[" + std::to_string(i) + "," + std::to_string(j) + "]";
}

ParamMonomial::ParamMonomial(Param p, unsigned exponent) {
  if (exponent > 0) factors_.emplace_back(p, exponent);
}

unsigned ParamMonomial::degree() const {
  unsigned d = 0;
  for (const auto& [p, e] : factors_) d += e;
  return d;
}

unsigned ParamMonomial::degree(Param::Kind kind) const {
  unsigned d = 0;
  for (const auto& [p, e] : factors_)
    if (p.kind == kind) d += e;
  return d;
}

unsigned ParamMonomial::exponent(Param p) const {
  for (const auto& [q, e] : factors_)
    if (q == p) return e;
  return 0;
}

ParamMonomial ParamMonomial::without(Param::Kind kind) const {
  ParamMonomial out;
  for (const auto& f : factors_)
    if (f.first.kind != kind) out.factors_.push_back(f);
  return out;
}

ParamMonomial operator*(const ParamMonomial& a, const ParamMonomial& b) {
  ParamMonomial out;
  auto& f = out.factors_;
  f.reserve(a.factors_.size() + b.factors_.size());
  auto ia = a.factors_.begin();
  auto ib = b.factors_.begin();
  while (ia != a.factors_.end() || ib != b.factors_.end()) {
    if (ib == b.factors_.end() || (ia != a.factors_.end() && ia->first < ib->first)) {
      f.push_back(*ia++);
    } else if (ia == a.factors_.end() || ib->first < ia->first) {
      f.push_back(*ib++);
    } else {
      f.emplace_back(ia->first, ia->second + ib->second);
      ++ia;
      ++ib;
    }
  }
  return out;
}

bool operator<(const ParamMonomial& a, const ParamMonomial& b) {
  const unsigned da = a.degree();
  const unsigned db = b.degree();
  if (da != db) return da < db;
  return a.factors_ < b.factors_;
}

ParamPolynomial::ParamPolynomial(GaussianRational c) {
  if (!c.is_zero()) terms_.emplace(ParamMonomial{}, std::move(c));
}

ParamPolynomial ParamPolynomial::translation(int index) {
  ParamPolynomial p;
  p.terms_.emplace(ParamMonomial(Param::translation(index)), GaussianRational(1));
  return p;
}

ParamPolynomial ParamPolynomial::theta(int i, int j) {
  if (i == j) return {};
  ParamPolynomial p;
  if (i < j)
    p.terms_.emplace(ParamMonomial(Param::theta(i, j)), GaussianRational(1));
  else
    p.terms_.emplace(ParamMonomial(Param::theta(j, i)), GaussianRational(-1));
  return p;
}

bool ParamPolynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

GaussianRational ParamPolynomial::constant() const { return coefficient(ParamMonomial{}); }

unsigned ParamPolynomial::degree(Param::Kind kind) const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree(kind));
  return d;
}

GaussianRational ParamPolynomial::coefficient(const ParamMonomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? GaussianRational{} : it->second;
}

void ParamPolynomial::add_term(const ParamMonomial& m, const GaussianRational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

ParamPolynomial& ParamPolynomial::operator+=(const ParamPolynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

ParamPolynomial& ParamPolynomial::operator-=(const ParamPolynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

ParamPolynomial operator*(const ParamPolynomial& a, const ParamPolynomial& b) {
  ParamPolynomial out;
  if (a.is_constant() && b.is_constant()) {
    if (!a.is_zero() && !b.is_zero()) out = ParamPolynomial(a.constant() * b.constant());
    return out;
  }
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  return out;
}

ParamPolynomial& ParamPolynomial::operator*=(const ParamPolynomial& o) { return *this = *this * o; }

ParamPolynomial& ParamPolynomial::operator*=(const GaussianRational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

ParamPolynomial ParamPolynomial::operator-() const {
  ParamPolynomial out = *this;
  for (auto& [m, v] : out.terms_) v = -v;
  return out;
}

std::string ParamPolynomial::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += c.str();
    for (const auto& [p, e] : m.factors()) {
      out += "*" + p.name();
      if (e > 1) out += "^" + std::to_string(e);
    }
  }
  return out;
}

}  // namespace ncspace::algebra
