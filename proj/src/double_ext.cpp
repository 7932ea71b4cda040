#include "doe/double_ext.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "doe/errors.hpp"
#include "doe/expression.hpp"

namespace doe {

DoubleExtSpec::DoubleExtSpec(StructureMaps maps, FieldElement p12, FieldElement p11,
                             std::array<Polynomial, 3> tau)
    : maps_(std::move(maps)), p12_(std::move(p12)), p11_(std::move(p11)), tau_(std::move(tau)) {
  const ContextPtr& ctx = maps_.context();
  for (const auto& name : ctx->generators()) {
    if (name == "y1" || name == "y2") {
      throw MalformedDocument("generator name '" + name + "' is reserved");
    }
  }
  if (!(p12_.field() == ctx->field()) || !(p11_.field() == ctx->field())) {
    throw ContextMismatch("parameter scalars from a different field");
  }
  for (const auto& t : tau_) require_same(ctx, t.context());
}

std::vector<Polynomial> DoubleExtSpec::generator_images(int i, int j) const {
  std::vector<Polynomial> out;
  for (std::size_t g = 0; g < context()->size(); ++g) {
    out.push_back(j == 0 ? maps_.delta(g)[i - 1] : maps_.sigma(g)(i - 1, j - 1));
  }
  return out;
}

// ---------------------------------------------------------------------------
// ExtElement

ExtElement::ExtElement(ContextPtr ctx) : ctx_(std::move(ctx)) {}

ExtElement ExtElement::constant(const Polynomial& a) { return monomial(a, 0, 0); }

ExtElement ExtElement::monomial(const Polynomial& a, unsigned i, unsigned j) {
  ExtElement e(a.context());
  e.add_term(i, j, a);
  return e;
}

Polynomial ExtElement::coefficient(unsigned i, unsigned j) const {
  auto it = terms_.find({i, j});
  return it == terms_.end() ? Polynomial(ctx_) : it->second;
}

int ExtElement::degree() const {
  int d = -1;
  for (const auto& [ij, a] : terms_) d = std::max(d, static_cast<int>(ij.first + ij.second));
  return d;
}

ExtElement ExtElement::homogeneous_part(int d) const {
  ExtElement out(ctx_);
  for (const auto& [ij, a] : terms_) {
    if (static_cast<int>(ij.first + ij.second) == d) out.terms_.emplace(ij, a);
  }
  return out;
}

void ExtElement::add_term(unsigned i, unsigned j, const Polynomial& a) {
  require_same(ctx_, a.context());
  if (a.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace({i, j}, a);
  if (inserted) return;
  it->second += a;
  if (it->second.is_zero()) terms_.erase(it);
}

ExtElement ExtElement::operator-() const {
  ExtElement out(ctx_);
  for (const auto& [ij, a] : terms_) out.terms_.emplace(ij, -a);
  return out;
}

ExtElement& ExtElement::operator+=(const ExtElement& rhs) {
  require_same(ctx_, rhs.ctx_);
  for (const auto& [ij, a] : rhs.terms_) add_term(ij.first, ij.second, a);
  return *this;
}

ExtElement& ExtElement::operator-=(const ExtElement& rhs) {
  require_same(ctx_, rhs.ctx_);
  for (const auto& [ij, a] : rhs.terms_) add_term(ij.first, ij.second, -a);
  return *this;
}

ExtElement operator*(const Polynomial& a, const ExtElement& e) {
  require_same(a.context(), e.ctx_);
  ExtElement out(e.ctx_);
  if (a.is_zero()) return out;
  for (const auto& [ij, c] : e.terms_) out.add_term(ij.first, ij.second, a * c);
  return out;
}

ExtElement operator*(const FieldElement& c, const ExtElement& e) {
  return Polynomial(e.ctx_, c) * e;
}

bool operator==(const ExtElement& a, const ExtElement& b) {
  require_same(a.ctx_, b.ctx_);
  return a.terms_ == b.terms_;
}

std::string ExtElement::to_string(const std::string& name1, const std::string& name2) const {
  if (terms_.empty()) return "0";
  const bool rational = ctx_->field().is_rationals();
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto [i, j] = it->first;
    const Polynomial& a = it->second;
    std::string ypart;
    auto append = [&](const std::string& name, unsigned e) {
      if (!e) return;
      if (!ypart.empty()) ypart += '*';
      ypart += name;
      if (e > 1) ypart += '^' + std::to_string(e);
    };
    append(name1, i);
    append(name2, j);

    bool negative = false;
    std::string body;
    if (ypart.empty()) {
      body = a.to_string();
      if (body[0] == '-') {
        negative = true;
        body.erase(0, 1);
      }
    } else if (a.terms().size() == 1) {
      const auto& [m, c] = *a.terms().begin();
      negative = rational && c.value() < 0;
      std::string mag = negative ? (-c).to_string() : c.to_string();
      std::string mono = m.is_one() ? "" : monomial_to_string(m, *ctx_);
      if (mag != "1") body = mag;
      if (!mono.empty()) body += (body.empty() ? "" : "*") + mono;
      body += (body.empty() ? "" : "*") + ypart;
    } else {
      body = "(" + a.to_string() + ")*" + ypart;
    }

    if (out.empty()) {
      out = negative ? "-" + body : body;
    } else {
      out += negative ? " - " : " + ";
      out += body;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Rewriter

namespace {

constexpr std::size_t kNotBuilding = std::numeric_limits<std::size_t>::max();

ExtElement shift_y2(const ExtElement& e, unsigned n) {
  if (n == 0) return e;
  ExtElement out(e.context());
  for (const auto& [ij, a] : e.terms()) out.add_term(ij.first, ij.second + n, a);
  return out;
}

}  // namespace

Rewriter::Rewriter(const DoubleExtSpec& spec) : spec_(spec), ore_(spec.maps()), building_(kNotBuilding) {
  y2y1_.push_back(ExtElement::y2(spec.context()));
}

const ExtElement& Rewriter::y2_times_y1_power(unsigned i) {
  if (i < y2y1_.size()) return y2y1_[i];
  // Building y2 y1^n may only consult y2 y1^m with m < n; reaching here
  // mid-build would mean the inversion measure failed to decrease.
  if (building_ != kNotBuilding) {
    throw std::logic_error("rewriting requested y2*y1^" + std::to_string(i) +
                           " while building y2*y1^" + std::to_string(building_));
  }
  const ContextPtr& ctx = spec_.context();
  while (y2y1_.size() <= i) {
    const unsigned n = static_cast<unsigned>(y2y1_.size());
    building_ = n;
    ExtElement prev = y2y1_.back();
    ExtElement next = spec_.p12() * left_mul_y(1, prev);
    next.add_term(n + 1, 0, Polynomial(ctx, spec_.p11()));
    next.add_term(n, 0, spec_.tau(1));
    next += spec_.tau(2) * prev;
    next.add_term(n - 1, 0, spec_.tau(0));
    ++steps_;
    building_ = kNotBuilding;
    y2y1_.push_back(std::move(next));
  }
  return y2y1_[i];
}

ExtElement Rewriter::left_mul_y(int k, const ExtElement& e) {
  if (k != 1 && k != 2) throw std::invalid_argument("left_mul_y expects 1 or 2");
  const int row = k - 1;
  ExtElement out(e.context());
  for (const auto& [ij, a] : e.terms()) {
    const auto [i, j] = ij;
    ++steps_;
    OreImage img = ore_.apply(a);
    out.add_term(i + 1, j, img.sigma(row, 0));
    const Polynomial& cross = img.sigma(row, 1);
    if (!cross.is_zero()) {
      // Copy: building the cache may reallocate the vector.
      ExtElement y2y1i = y2_times_y1_power(i);
      out += cross * shift_y2(y2y1i, j);
    }
    out.add_term(i, j, img.delta[row]);
  }
  return out;
}

ExtElement Rewriter::mul(const ExtElement& u, const ExtElement& v) {
  require_same(u.context(), v.context());
  ExtElement out(u.context());
  // Group u's terms by y2-exponent so y2^j v is computed once per j.
  std::map<unsigned, std::vector<std::pair<unsigned, const Polynomial*>>> by_j;
  for (const auto& [ij, a] : u.terms()) by_j[ij.second].push_back({ij.first, &a});
  ExtElement y2_power_v = v;
  unsigned have_j = 0;
  for (const auto& [j, entries] : by_j) {
    while (have_j < j) {
      y2_power_v = left_mul_y(2, y2_power_v);
      ++have_j;
    }
    unsigned max_i = 0;
    for (const auto& e : entries) max_i = std::max(max_i, e.first);
    std::vector<const Polynomial*> coeff_at(max_i + 1, nullptr);
    for (const auto& e : entries) coeff_at[e.first] = e.second;
    ExtElement acc = y2_power_v;
    for (unsigned i = 0; i <= max_i; ++i) {
      if (i > 0) acc = left_mul_y(1, acc);
      if (coeff_at[i]) out += *coeff_at[i] * acc;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Relations

namespace {

// One summand c * [tau_l *] [rho_r] s_{a1 b1} s_{a2 b2} ... with the chain
// applied rightmost first, left tau multiplying, rho multiplying on the
// right outermost.
struct RelTerm {
  FieldElement coef;
  int left_tau;
  int right_tau;
  std::vector<std::pair<int, int>> chain;
};

struct Relation {
  std::string id;
  std::vector<RelTerm> lhs;
  std::vector<RelTerm> rhs;
};

std::vector<Relation> relation_table(const DoubleExtSpec& s) {
  const FieldSpec& f = s.field();
  const FieldElement one = FieldElement::one(f);
  const FieldElement p = s.p12();
  const FieldElement q = s.p11();
  using C = std::vector<std::pair<int, int>>;
  auto t = [](FieldElement c, C chain, int left = -1, int right = -1) {
    return RelTerm{std::move(c), left, right, std::move(chain)};
  };
  std::vector<Relation> rel;
  rel.push_back({"R3.1",
                 {t(one, {{2, 1}, {1, 1}}), t(q, {{2, 2}, {1, 1}})},
                 {t(q, {{1, 1}, {1, 1}}), t(q * q, {{1, 2}, {1, 1}}), t(p, {{1, 1}, {2, 1}}),
                  t(q * p, {{1, 2}, {2, 1}})}});
  rel.push_back({"R3.2",
                 {t(one, {{2, 1}, {1, 2}}), t(p, {{2, 2}, {1, 1}})},
                 {t(q, {{1, 1}, {1, 2}}), t(q * p, {{1, 2}, {1, 1}}), t(p, {{1, 1}, {2, 2}}),
                  t(p * p, {{1, 2}, {2, 1}})}});
  rel.push_back({"R3.3",
                 {t(one, {{2, 2}, {1, 2}})},
                 {t(q, {{1, 2}, {1, 2}}), t(p, {{1, 2}, {2, 2}})}});
  rel.push_back({"R3.4",
                 {t(one, {{2, 0}, {1, 1}}), t(one, {{2, 1}, {1, 0}}),
                  t(one, {{2, 2}, {1, 1}}, -1, 1)},
                 {t(q, {{1, 0}, {1, 1}}), t(q, {{1, 1}, {1, 0}}), t(q, {{1, 2}, {1, 1}}, 1),
                  t(p, {{1, 0}, {2, 1}}), t(p, {{1, 1}, {2, 0}}), t(p, {{1, 2}, {2, 1}}, 1),
                  t(one, {{1, 1}}, 1), t(one, {{2, 1}}, 2)}});
  rel.push_back({"R3.5",
                 {t(one, {{2, 0}, {1, 2}}), t(one, {{2, 2}, {1, 0}}),
                  t(one, {{2, 2}, {1, 1}}, -1, 2)},
                 {t(q, {{1, 0}, {1, 2}}), t(q, {{1, 2}, {1, 0}}), t(q, {{1, 2}, {1, 1}}, 2),
                  t(p, {{1, 0}, {2, 2}}), t(p, {{1, 2}, {2, 0}}), t(p, {{1, 2}, {2, 1}}, 2),
                  t(one, {{1, 2}}, 1), t(one, {{2, 2}}, 2)}});
  rel.push_back({"R3.6",
                 {t(one, {{2, 0}, {1, 0}}), t(one, {{2, 2}, {1, 1}}, -1, 0)},
                 {t(q, {{1, 0}, {1, 0}}), t(q, {{1, 2}, {1, 1}}, 0), t(p, {{1, 0}, {2, 0}}),
                  t(p, {{1, 2}, {2, 1}}, 0), t(one, {{1, 0}}, 1), t(one, {{2, 0}}, 2),
                  t(one, {}, 0)}});
  return rel;
}

Polynomial eval_term(const RelTerm& term, const DoubleExtSpec& s, OreEvaluator& ev,
                     const Polynomial& g) {
  Polynomial v = g;
  for (auto it = term.chain.rbegin(); it != term.chain.rend(); ++it) {
    v = ev.entry(it->first, it->second, v);
  }
  if (term.left_tau >= 0) v = s.tau(term.left_tau) * v;
  if (term.right_tau >= 0) v = v * s.tau(term.right_tau);
  return v * term.coef;
}

}  // namespace

ValidationReport validate_relations(const DoubleExtSpec& spec) {
  ValidationReport report;
  OreEvaluator ev(spec.maps());
  const ContextPtr& ctx = spec.context();
  const auto relations = relation_table(spec);
  for (std::size_t g = 0; g < ctx->size(); ++g) {
    Polynomial x = Polynomial::generator(ctx, g);
    for (const auto& rel : relations) {
      Polynomial residual(ctx);
      for (const auto& term : rel.lhs) residual += eval_term(term, spec, ev, x);
      for (const auto& term : rel.rhs) residual -= eval_term(term, spec, ev, x);
      report.record(rel.id, ctx->generators()[g], residual.is_zero(), residual.to_string());
    }
  }
  return report;
}

ExtElement resolve_overlap(const DoubleExtSpec& spec, std::size_t generator) {
  const ContextPtr& ctx = spec.context();
  Rewriter rw(spec);
  ExtElement g = ExtElement::constant(Polynomial::generator(ctx, generator));
  ExtElement y1g = rw.left_mul_y(1, g);
  ExtElement y2g = rw.left_mul_y(2, g);

  ExtElement quadratic_first = spec.p12() * rw.left_mul_y(1, y2g);
  quadratic_first += spec.p11() * rw.left_mul_y(1, y1g);
  quadratic_first += spec.tau(1) * y1g;
  quadratic_first += spec.tau(2) * y2g;
  quadratic_first += spec.tau(0) * g;

  ExtElement mixing_first = rw.left_mul_y(2, y1g);
  return quadratic_first - mixing_first;
}

ValidationReport validate_all(const DoubleExtSpec& spec) {
  ValidationReport report = validate_structure_maps(spec.maps());
  report.merge(validate_relations(spec));
  const ContextPtr& ctx = spec.context();
  for (std::size_t g = 0; g < ctx->size(); ++g) {
    ExtElement r = resolve_overlap(spec, g);
    report.record("overlap", ctx->generators()[g], r.is_zero(), r.to_string());
  }
  return report;
}

ValidatedSpec ValidatedSpec::validate(DoubleExtSpec spec) {
  ValidationReport report = validate_all(spec);
  if (!report.valid()) {
    const auto& f = report.failures.front();
    throw UnvalidatedSpec("spec fails " + f.check + " at " + f.generator + ": " + f.residual);
  }
  return ValidatedSpec(std::move(spec));
}

std::optional<ValidatedSpec> ValidatedSpec::try_validate(DoubleExtSpec spec,
                                                         ValidationReport* report) {
  ValidationReport r = validate_all(spec);
  bool ok = r.valid();
  if (report) *report = std::move(r);
  if (!ok) return std::nullopt;
  return ValidatedSpec(std::move(spec));
}

ExtElement nf_mul(const ValidatedSpec& spec, const ExtElement& u, const ExtElement& v) {
  Rewriter rw(spec.spec());
  return rw.mul(u, v);
}

ExtElement nf_reduce_word(const ValidatedSpec& spec, const std::vector<Letter>& word) {
  const ContextPtr& ctx = spec.context();
  Rewriter rw(spec.spec());
  ExtElement acc = ExtElement::constant(Polynomial(ctx, 1));
  // Build from the right so each step is a left multiplication.
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    switch (it->kind) {
      case Letter::Kind::Y1:
        acc = rw.left_mul_y(1, acc);
        break;
      case Letter::Kind::Y2:
        acc = rw.left_mul_y(2, acc);
        break;
      case Letter::Kind::Base:
        acc = Polynomial::generator(ctx, it->base_index) * acc;
        break;
    }
  }
  return acc;
}

namespace {

struct ExtOps {
  const ContextPtr& ctx;
  Rewriter& rw;

  ExtElement number(const mpz_class& num, const mpz_class& den, std::size_t) {
    return ExtElement::constant(Polynomial(ctx, FieldElement(ctx->field(), num, den)));
  }
  ExtElement name(const std::string& n, std::size_t) {
    if (n == "y1") return ExtElement::y1(ctx);
    if (n == "y2") return ExtElement::y2(ctx);
    return ExtElement::constant(Polynomial::generator(ctx, n));
  }
  ExtElement add(ExtElement a, const ExtElement& b) { return a += b; }
  ExtElement sub(ExtElement a, const ExtElement& b) { return a -= b; }
  ExtElement mul(const ExtElement& a, const ExtElement& b) { return rw.mul(a, b); }
  ExtElement neg(const ExtElement& a) { return -a; }
  ExtElement pow(const ExtElement& a, unsigned e) {
    ExtElement r = ExtElement::constant(Polynomial(ctx, 1));
    for (unsigned i = 0; i < e; ++i) r = rw.mul(r, a);
    return r;
  }
};

}  // namespace

ExtElement parse_ext(const ValidatedSpec& spec, std::string_view text) {
  Expr e = parse_expression(text, ParseOptions{.juxtaposition = true});
  Rewriter rw(spec.spec());
  ExtOps ops{spec.context(), rw};
  return evaluate(*e, ops);
}

Polynomial det_sigma_apply(const DoubleExtSpec& spec, const Polynomial& f) {
  require_same(spec.context(), f.context());
  OreEvaluator ev(spec.maps());
  Polynomial s11 = ev.entry(1, 1, f);
  Polynomial s21 = ev.entry(2, 1, f);
  Polynomial out = ev.entry(2, 2, s11);
  out -= ev.entry(1, 2, s11) * spec.p11();
  out -= ev.entry(1, 2, s21) * spec.p12();
  return out;
}

}  // namespace doe
