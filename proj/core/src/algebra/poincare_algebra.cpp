#include "ncspace/algebra/poincare_algebra.hpp"

#include "ncspace/algebra/errors.hpp"

#include <algorithm>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <unordered_map>

namespace ncspace::algebra {

namespace {

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept {
    std::size_t h = w.size();
    for (auto g : w) h = h * 131 + g + 1;
    return h;
  }
};

bool is_sorted_word(const Word& w) { return std::is_sorted(w.begin(), w.end()); }

}  // namespace

struct PoincareAlgebra::Memo {
  std::shared_mutex mutex;
  std::unordered_map<Word, std::shared_ptr<const ScalarTerms>, WordHash> words;
};

PoincareAlgebra::PoincareAlgebra(int dimension)
    : dimension_(dimension), generator_count_(algebra::generator_count(dimension)),
      memo_(std::make_shared<Memo>()) {
  if (dimension < 2 || generator_count_ > 255)
    throw DimensionError("unsupported dimension " + std::to_string(dimension));

  const int n = generator_count_;
  brackets_.resize(static_cast<std::size_t>(n * n));
  const GaussianRational i = GaussianRational::i();

  auto momentum_index = [&](int mu) {
    return static_cast<std::uint8_t>(generator_index(Generator::momentum(mu), dimension_));
  };
  // Appends c * J_{m n} (antisymmetric extension) to `out`.
  auto add_lorentz = [&](std::vector<LinearTerm>& out, int m, int nu, const GaussianRational& c) {
    if (m == nu || c.is_zero()) return;
    const auto sg = Generator::lorentz(m, nu);
    const auto index = static_cast<std::uint8_t>(generator_index(sg.generator, dimension_));
    const GaussianRational value = sg.sign > 0 ? c : -c;
    auto it = std::find_if(out.begin(), out.end(), [&](const LinearTerm& t) { return t.generator == index; });
    if (it == out.end()) {
      out.push_back({index, value});
    } else {
      it->coeff += value;
      if (it->coeff.is_zero()) out.erase(it);
    }
  };

  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      const Generator ga = generator_at(a, dimension_);
      const Generator gb = generator_at(b, dimension_);
      auto& out = brackets_[static_cast<std::size_t>(a * n + b)];
      if (ga.is_momentum() && gb.is_momentum()) continue;
      if (!ga.is_momentum() && gb.is_momentum()) {
        // [J_rs, P_mu] = i (eta_{mu r} P_s - eta_{mu s} P_r)
        const int r = ga.mu, s = ga.nu, mu = gb.mu;
        if (eta(mu, r) != 0) out.push_back({momentum_index(s), i * GaussianRational(eta(mu, r))});
        if (eta(mu, s) != 0) out.push_back({momentum_index(r), i * GaussianRational(-eta(mu, s))});
        continue;
      }
      if (ga.is_momentum() && !gb.is_momentum()) {
        // [P_mu, J_rs] = -[J_rs, P_mu]
        const int r = gb.mu, s = gb.nu, mu = ga.mu;
        if (eta(mu, r) != 0) out.push_back({momentum_index(s), i * GaussianRational(-eta(mu, r))});
        if (eta(mu, s) != 0) out.push_back({momentum_index(r), i * GaussianRational(eta(mu, s))});
        continue;
      }
      // [J_mn, J_rs] = i (eta_mr J_ns - eta_ms J_nr - eta_nr J_ms + eta_ns J_mr)
      const int m = ga.mu, nu = ga.nu, r = gb.mu, s = gb.nu;
      add_lorentz(out, nu, s, i * GaussianRational(eta(m, r)));
      add_lorentz(out, nu, r, i * GaussianRational(-eta(m, s)));
      add_lorentz(out, m, s, i * GaussianRational(-eta(nu, r)));
      add_lorentz(out, m, r, i * GaussianRational(eta(nu, s)));
    }
  }
}

AlgebraElement PoincareAlgebra::momentum(int mu) const {
  return AlgebraElement::generator(dimension_, Generator::momentum(mu));
}

AlgebraElement PoincareAlgebra::lorentz(int mu, int nu) const {
  if (mu < 0 || nu < 0 || mu >= dimension_ || nu >= dimension_)
    throw DimensionError("J index out of range for dimension " + std::to_string(dimension_));
  if (mu == nu) return zero();
  const auto sg = Generator::lorentz(mu, nu);
  return AlgebraElement::generator(dimension_, sg.generator, sg.sign);
}

AlgebraElement PoincareAlgebra::mass_squared() const { return mass_squared_element(dimension_); }

AlgebraElement PoincareAlgebra::coordinate(int mu) const {
  if (mu < 0 || mu >= dimension_) throw DimensionError("X index out of range");
  AlgebraElement sum(dimension_);
  const GaussianRational half = GaussianRational::fraction(1, 2);
  for (int nu = 0; nu < dimension_; ++nu) {
    if (nu == mu) continue;
    // P^nu = eta^{nu nu} P_nu
    const ParamPolynomial c(half * GaussianRational(eta(nu, nu)));
    const AlgebraElement j = lorentz(mu, nu);
    const AlgebraElement p = momentum(nu);
    sum += c * (j * p);
    sum += c * (p * j);
  }
  return normal_form(sum.with_denominator_power(1));
}

AlgebraElement PoincareAlgebra::translation_generator() const {
  AlgebraElement t(dimension_);
  for (int rho = 0; rho < dimension_; ++rho)
    t += ParamPolynomial::translation(rho) * ParamPolynomial(eta(rho, rho)) * momentum(rho);
  return t;
}

AlgebraElement PoincareAlgebra::theta_momentum(int mu) const {
  if (mu < 0 || mu >= dimension_) throw DimensionError("Theta index out of range");
  AlgebraElement t(dimension_);
  for (int nu = 0; nu < dimension_; ++nu)
    t += ParamPolynomial::theta(mu, nu) * ParamPolynomial(eta(nu, nu)) * momentum(nu);
  return t;
}

AlgebraElement PoincareAlgebra::structure_commutator(Generator g1, Generator g2) const {
  const int a = generator_index(g1, dimension_);
  const int b = generator_index(g2, dimension_);
  AlgebraElement out(dimension_);
  for (const auto& t : bracket(a, b)) out.add_term(Word{t.generator}, ParamPolynomial(t.coeff));
  return out;
}

std::shared_ptr<const PoincareAlgebra::ScalarTerms> PoincareAlgebra::normal_order_word(const Word& w) const {
  if (is_sorted_word(w)) return std::make_shared<const ScalarTerms>(ScalarTerms{{w, GaussianRational(1)}});
  {
    std::shared_lock lock(memo_->mutex);
    auto it = memo_->words.find(w);
    if (it != memo_->words.end()) return it->second;
  }

  std::size_t pos = 0;
  while (w[pos] <= w[pos + 1]) ++pos;

  std::map<Word, GaussianRational, WordLess> acc;
  auto accumulate = [&](const Word& word, const GaussianRational& c) {
    const auto ordered = normal_order_word(word);
    for (const auto& [nw, nc] : *ordered) {
      auto [it, inserted] = acc.try_emplace(nw, nc * c);
      if (!inserted) {
        it->second += nc * c;
        if (it->second.is_zero()) acc.erase(it);
      }
    }
  };

  // x y = y x + [x, y]
  Word swapped = w;
  std::swap(swapped[pos], swapped[pos + 1]);
  accumulate(swapped, GaussianRational(1));
  for (const auto& t : bracket(w[pos], w[pos + 1])) {
    Word shorter;
    shorter.reserve(w.size() - 1);
    shorter.insert(shorter.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(pos));
    shorter.push_back(t.generator);
    shorter.insert(shorter.end(), w.begin() + static_cast<std::ptrdiff_t>(pos + 2), w.end());
    accumulate(shorter, t.coeff);
  }

  auto result = std::make_shared<const ScalarTerms>(acc.begin(), acc.end());
  std::unique_lock lock(memo_->mutex);
  return memo_->words.try_emplace(w, std::move(result)).first->second;
}

AlgebraElement PoincareAlgebra::normal_form(const AlgebraElement& x) const {
  AlgebraElement out(dimension_);
  for (const auto& [w, c] : x.terms()) {
    if (is_sorted_word(w)) {
      out.add_term(w, c);
      continue;
    }
    const auto ordered = normal_order_word(w);
    for (const auto& [nw, nc] : *ordered) {
      ParamPolynomial scaled = c;
      scaled *= nc;
      out.add_term(nw, scaled);
    }
  }
  return out.with_denominator_power(x.denominator_power());
}

AlgebraElement PoincareAlgebra::normal_form_randomized(const AlgebraElement& x, std::mt19937_64& rng) const {
  AlgebraElement done(dimension_);
  std::map<Word, ParamPolynomial, WordLess> pending;
  auto push = [&](const Word& w, const ParamPolynomial& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = pending.try_emplace(w, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) pending.erase(it);
    }
  };
  for (const auto& [w, c] : x.terms()) push(w, c);

  while (!pending.empty()) {
    auto it = pending.begin();
    std::advance(it, std::uniform_int_distribution<std::size_t>(0, pending.size() - 1)(rng));
    const Word w = it->first;
    const ParamPolynomial c = it->second;
    pending.erase(it);

    std::vector<std::size_t> descents;
    for (std::size_t k = 0; k + 1 < w.size(); ++k)
      if (w[k] > w[k + 1]) descents.push_back(k);
    if (descents.empty()) {
      done.add_term(w, c);
      continue;
    }
    const std::size_t pos = descents[std::uniform_int_distribution<std::size_t>(0, descents.size() - 1)(rng)];
    Word swapped = w;
    std::swap(swapped[pos], swapped[pos + 1]);
    push(swapped, c);
    for (const auto& t : bracket(w[pos], w[pos + 1])) {
      Word shorter(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(pos));
      shorter.push_back(t.generator);
      shorter.insert(shorter.end(), w.begin() + static_cast<std::ptrdiff_t>(pos + 2), w.end());
      ParamPolynomial scaled = c;
      scaled *= t.coeff;
      push(shorter, scaled);
    }
  }
  return done.with_denominator_power(x.denominator_power());
}

AlgebraElement PoincareAlgebra::commutator(const AlgebraElement& a, const AlgebraElement& b) const {
  return normal_form(a * b - b * a);
}

AlgebraElement PoincareAlgebra::difference_witness(const AlgebraElement& a, const AlgebraElement& b) const {
  const int k = std::max(a.denominator_power(), b.denominator_power());
  const AlgebraElement lhs = a.numerator().times_mass_squared(k - a.denominator_power());
  const AlgebraElement rhs = b.numerator().times_mass_squared(k - b.denominator_power());
  return normal_form(lhs - rhs);
}

bool PoincareAlgebra::equals(const AlgebraElement& a, const AlgebraElement& b) const {
  return difference_witness(a, b).is_zero();
}

TranslationSeries PoincareAlgebra::adjoint_translation_series(const AlgebraElement& x, int max_order) const {
  const AlgebraElement generator = translation_generator();
  AlgebraElement sum = normal_form(x);
  AlgebraElement term = sum;
  for (int k = 1; k <= max_order; ++k) {
    // i^k/k! ad^k = (i/k) ad applied to the previous term
    term = commutator(generator, term) * ParamPolynomial(GaussianRational::i() / GaussianRational(k));
    if (term.is_zero()) return {sum, k};
    sum += term;
  }
  throw NonNilpotentError("translation series still nonzero at order " + std::to_string(max_order));
}

AlgebraElement PoincareAlgebra::substitute_translation(const AlgebraElement& x) const {
  AlgebraElement out(dimension_);
  for (const auto& [w, poly] : x.terms()) {
    for (const auto& [m, c] : poly.terms()) {
      const ParamMonomial rest = m.without(Param::Kind::Translation);
      ParamPolynomial coeff;
      coeff.add_term(rest, c);
      const AlgebraElement word = AlgebraElement::from_terms(dimension_, {{w, coeff}});
      const unsigned degree = m.degree(Param::Kind::Translation);
      if (degree == 0) {
        out += word;
        continue;
      }
      // degree is exactly 1 here
      int lambda = -1;
      for (const auto& [p, e] : m.factors())
        if (p.kind == Param::Kind::Translation) lambda = p.i;
      out += word * theta_momentum(lambda);
    }
  }
  return normal_form(out.with_denominator_power(x.denominator_power()));
}

AlgebraElement PoincareAlgebra::deform_warped(const AlgebraElement& x) const {
  if (x.parameter_degree(Param::Kind::Translation) > 0)
    throw UnsupportedDeformationError("input already depends on translation parameters a[.]");
  const TranslationSeries series = adjoint_translation_series(x);
  if (series.value.parameter_degree(Param::Kind::Translation) > 1)
    throw UnsupportedDeformationError("translation adjoint action is not affine in a");
  return substitute_translation(series.value);
}

bool PoincareAlgebra::jacobi_check(Generator g1, Generator g2, Generator g3) const {
  const auto e1 = AlgebraElement::generator(dimension_, g1);
  const auto e2 = AlgebraElement::generator(dimension_, g2);
  const auto e3 = AlgebraElement::generator(dimension_, g3);
  const AlgebraElement sum = commutator(commutator(e1, e2), e3) + commutator(commutator(e2, e3), e1) +
                             commutator(commutator(e3, e1), e2);
  return normal_form(sum).is_zero();
}

std::vector<StructureConstant> PoincareAlgebra::structure_constants() const {
  std::vector<StructureConstant> out;
  for (int a = 0; a < generator_count_; ++a)
    for (int b = a + 1; b < generator_count_; ++b)
      for (const auto& t : bracket(a, b)) out.push_back({a, b, t.generator, t.coeff});
  return out;
}

PoincareAlgebra PoincareAlgebra::with_flipped_constant(const StructureConstant& c) const {
  PoincareAlgebra copy = *this;
  copy.memo_ = std::make_shared<Memo>();
  auto flip = [&](int a, int b) {
    for (auto& t : copy.brackets_[static_cast<std::size_t>(a * generator_count_ + b)])
      if (t.generator == c.result) t.coeff = -t.coeff;
  };
  flip(c.first, c.second);
  flip(c.second, c.first);
  return copy;
}

}  // namespace ncspace::algebra
