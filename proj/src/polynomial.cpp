#include "doe/polynomial.hpp"

#include <algorithm>
#include <numeric>

#include "doe/errors.hpp"

namespace doe {

BaseContext::BaseContext(FieldSpec field, std::vector<std::string> generators)
    : field_(field), generators_(std::move(generators)) {}

int BaseContext::index_of(const std::string& name) const {
  auto it = std::find(generators_.begin(), generators_.end(), name);
  return it == generators_.end() ? -1 : static_cast<int>(it - generators_.begin());
}

ContextPtr make_context(FieldSpec field, std::vector<std::string> generators) {
  return std::make_shared<const BaseContext>(field, std::move(generators));
}

void require_same(const ContextPtr& a, const ContextPtr& b) {
  if (a == b) return;
  if (!a || !b || !(*a == *b)) {
    throw ContextMismatch("polynomials from different base contexts");
  }
}

Monomial::Monomial(std::vector<std::uint32_t> exponents) : exp_(std::move(exponents)) {
  degree_ = std::accumulate(exp_.begin(), exp_.end(), std::uint32_t{0});
}

Monomial Monomial::variable(std::size_t n, std::size_t i) {
  std::vector<std::uint32_t> e(n, 0);
  e[i] = 1;
  return Monomial(std::move(e));
}

Monomial Monomial::operator*(const Monomial& rhs) const {
  std::vector<std::uint32_t> e(exp_);
  for (std::size_t i = 0; i < e.size(); ++i) e[i] += rhs.exp_[i];
  return Monomial(std::move(e));
}

bool DegLexGreater::operator()(const Monomial& a, const Monomial& b) const {
  if (a.degree() != b.degree()) return a.degree() > b.degree();
  return a.exponents() > b.exponents();
}

Polynomial::Polynomial(ContextPtr ctx) : ctx_(std::move(ctx)) {}

Polynomial::Polynomial(ContextPtr ctx, const FieldElement& constant)
    : ctx_(std::move(ctx)) {
  if (!(constant.field() == ctx_->field())) {
    throw ContextMismatch("constant from a different field");
  }
  if (!constant.is_zero()) terms_.emplace(Monomial::one(ctx_->size()), constant);
}

Polynomial::Polynomial(ContextPtr ctx, long constant)
    : Polynomial(ctx, FieldElement(ctx->field(), constant)) {}

Polynomial Polynomial::from_terms(
    ContextPtr ctx, std::span<const std::pair<Monomial, FieldElement>> terms) {
  Polynomial p(std::move(ctx));
  for (const auto& [m, c] : terms) {
    if (m.exponents().size() != p.ctx_->size()) {
      throw ContextMismatch("monomial arity does not match context");
    }
    if (!(c.field() == p.field())) throw ContextMismatch("coefficient field mismatch");
    p.add_term(m, c);
  }
  return p;
}

Polynomial Polynomial::generator(ContextPtr ctx, std::size_t index) {
  Polynomial p(ctx);
  p.terms_.emplace(Monomial::variable(ctx->size(), index), FieldElement::one(ctx->field()));
  return p;
}

Polynomial Polynomial::generator(ContextPtr ctx, const std::string& name) {
  int i = ctx->index_of(name);
  if (i < 0) throw UnknownGenerator(name);
  return generator(std::move(ctx), static_cast<std::size_t>(i));
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

FieldElement Polynomial::constant_term() const {
  return coefficient(Monomial::one(ctx_->size()));
}

FieldElement Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? FieldElement::zero(field()) : it->second;
}

int Polynomial::degree() const {
  return terms_.empty() ? -1 : static_cast<int>(terms_.begin()->first.degree());
}

int Polynomial::degree_in(std::size_t i) const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m[i]));
  return d;
}

void Polynomial::add_term(const Monomial& m, const FieldElement& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

Polynomial Polynomial::operator-() const {
  Polynomial r(ctx_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  require_same(ctx_, rhs.ctx_);
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  require_same(ctx_, rhs.ctx_);
  for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_same(a.ctx_, b.ctx_);
  Polynomial r(a.ctx_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
  }
  return r;
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) {
  *this = *this * rhs;
  return *this;
}

Polynomial& Polynomial::operator*=(const FieldElement& c) {
  if (!(c.field() == field())) throw ContextMismatch("scalar from a different field");
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coeff] : terms_) coeff *= c;
  return *this;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result(ctx_, 1);
  Polynomial base = *this;
  while (e) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e) base *= base;
  }
  return result;
}

Polynomial Polynomial::substitute(const std::vector<Polynomial>& images) const {
  if (images.size() != ctx_->size()) {
    throw ContextMismatch("substitution needs one image per generator");
  }
  if (images.empty()) return *this;
  const ContextPtr& target = images.front().context();
  for (const auto& img : images) require_same(target, img.context());
  if (!(target->field() == field())) throw ContextMismatch("field mismatch in substitution");

  // Powers are cached per generator since monomials share them.
  std::vector<std::vector<Polynomial>> powers(images.size());
  auto power = [&](std::size_t i, std::uint32_t e) -> const Polynomial& {
    auto& cache = powers[i];
    if (cache.empty()) cache.emplace_back(target, 1);
    while (cache.size() <= e) cache.push_back(cache.back() * images[i]);
    return cache[e];
  };

  Polynomial result(target);
  for (const auto& [m, c] : terms_) {
    Polynomial term(target, c);
    for (std::size_t i = 0; i < m.exponents().size(); ++i) {
      if (m[i]) term *= power(i, m[i]);
    }
    result += term;
  }
  return result;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  require_same(a.ctx_, b.ctx_);
  return a.terms_ == b.terms_;
}

std::string monomial_to_string(const Monomial& m, const BaseContext& ctx) {
  std::string out;
  for (std::size_t i = 0; i < m.exponents().size(); ++i) {
    if (!m[i]) continue;
    if (!out.empty()) out += '*';
    out += ctx.generators()[i];
    if (m[i] > 1) out += '^' + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  const bool rational = field().is_rationals();
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    bool negative = rational && c.value() < 0;
    std::string mag = negative ? (-c).to_string() : c.to_string();
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (m.is_one()) {
      out += mag;
    } else if (mag == "1") {
      out += monomial_to_string(m, *ctx_);
    } else {
      out += mag + '*' + monomial_to_string(m, *ctx_);
    }
  }
  return out;
}

Polynomial poly_mul(const Polynomial& f, const Polynomial& g) { return f * g; }

Polynomial poly_canonicalize(ContextPtr ctx,
                             std::span<const std::pair<Monomial, FieldElement>> terms) {
  return Polynomial::from_terms(std::move(ctx), terms);
}

}  // namespace doe
