#include "doe/ore_maps.hpp"

#include "doe/errors.hpp"
#include "doe/linalg.hpp"

namespace doe {

Mat2::Mat2(const ContextPtr& ctx)
    : e_{Polynomial(ctx), Polynomial(ctx), Polynomial(ctx), Polynomial(ctx)} {}

Mat2::Mat2(Polynomial s11, Polynomial s12, Polynomial s21, Polynomial s22)
    : e_{std::move(s11), std::move(s12), std::move(s21), std::move(s22)} {
  for (const auto& p : e_) require_same(e_[0].context(), p.context());
}

Mat2 Mat2::identity(const ContextPtr& ctx) {
  return Mat2(Polynomial(ctx, 1), Polynomial(ctx), Polynomial(ctx), Polynomial(ctx, 1));
}

Mat2 Mat2::operator*(const Mat2& rhs) const {
  const Mat2& a = *this;
  return Mat2(a(0, 0) * rhs(0, 0) + a(0, 1) * rhs(1, 0), a(0, 0) * rhs(0, 1) + a(0, 1) * rhs(1, 1),
              a(1, 0) * rhs(0, 0) + a(1, 1) * rhs(1, 0), a(1, 0) * rhs(0, 1) + a(1, 1) * rhs(1, 1));
}

Mat2 Mat2::operator-(const Mat2& rhs) const {
  return Mat2(e_[0] - rhs.e_[0], e_[1] - rhs.e_[1], e_[2] - rhs.e_[2], e_[3] - rhs.e_[3]);
}

bool Mat2::is_zero() const {
  for (const auto& p : e_) {
    if (!p.is_zero()) return false;
  }
  return true;
}

std::string Mat2::to_string() const {
  return "[[" + e_[0].to_string() + ", " + e_[1].to_string() + "], [" + e_[2].to_string() +
         ", " + e_[3].to_string() + "]]";
}

Col2::Col2(const ContextPtr& ctx) : e_{Polynomial(ctx), Polynomial(ctx)} {}

Col2::Col2(Polynomial d1, Polynomial d2) : e_{std::move(d1), std::move(d2)} {
  require_same(e_[0].context(), e_[1].context());
}

Col2 Col2::operator+(const Col2& rhs) const { return Col2(e_[0] + rhs.e_[0], e_[1] + rhs.e_[1]); }
Col2 Col2::operator-(const Col2& rhs) const { return Col2(e_[0] - rhs.e_[0], e_[1] - rhs.e_[1]); }
Col2 Col2::operator*(const Polynomial& a) const { return Col2(e_[0] * a, e_[1] * a); }

Col2 operator*(const Mat2& m, const Col2& c) {
  return Col2(m(0, 0) * c[0] + m(0, 1) * c[1], m(1, 0) * c[0] + m(1, 1) * c[1]);
}

bool Col2::is_zero() const { return e_[0].is_zero() && e_[1].is_zero(); }

std::string Col2::to_string() const {
  return "[" + e_[0].to_string() + ", " + e_[1].to_string() + "]";
}

StructureMaps::StructureMaps(ContextPtr ctx, std::vector<Mat2> sigma, std::vector<Col2> delta)
    : ctx_(std::move(ctx)), sigma_(std::move(sigma)), delta_(std::move(delta)) {
  if (sigma_.size() != ctx_->size() || delta_.size() != ctx_->size()) {
    throw ArityError("structure maps need one sigma matrix and one delta column per generator");
  }
  for (const auto& m : sigma_) require_same(ctx_, m.context());
  for (const auto& d : delta_) require_same(ctx_, d[0].context());
}

StructureMaps StructureMaps::trivial(const ContextPtr& ctx) {
  std::vector<Mat2> sigma;
  for (std::size_t g = 0; g < ctx->size(); ++g) {
    Polynomial x = Polynomial::generator(ctx, g);
    sigma.emplace_back(x, Polynomial(ctx), Polynomial(ctx), x);
  }
  return StructureMaps(ctx, std::move(sigma), std::vector<Col2>(ctx->size(), Col2(ctx)));
}

OreEvaluator::OreEvaluator(const StructureMaps& maps) : maps_(maps) {}

const OreImage& OreEvaluator::of_monomial(const Monomial& m) {
  auto it = cache_.find(m);
  if (it != cache_.end()) return it->second;
  const ContextPtr& ctx = maps_.context();
  if (m.is_one()) {
    return cache_.emplace(m, OreImage{Mat2::identity(ctx), Col2(ctx)}).first->second;
  }
  // Peel off the first generator: block(x_i * rest) = block(x_i) * block(rest).
  std::size_t i = 0;
  while (m[i] == 0) ++i;
  std::vector<std::uint32_t> rest_exp = m.exponents();
  --rest_exp[i];
  Monomial rest(std::move(rest_exp));
  OreImage tail = of_monomial(rest);
  Polynomial rest_poly = Polynomial::from_terms(
      ctx, std::vector<std::pair<Monomial, FieldElement>>{{rest, FieldElement::one(ctx->field())}});
  const Mat2& sx = maps_.sigma(i);
  const Col2& dx = maps_.delta(i);
  OreImage img{sx * tail.sigma, sx * tail.delta + dx * rest_poly};
  return cache_.emplace(m, std::move(img)).first->second;
}

OreImage OreEvaluator::apply(const Polynomial& f) {
  require_same(maps_.context(), f.context());
  const ContextPtr& ctx = maps_.context();
  OreImage out{Mat2(ctx), Col2(ctx)};
  for (const auto& [m, c] : f.terms()) {
    const OreImage& img = of_monomial(m);
    for (int r = 0; r < 2; ++r) {
      for (int col = 0; col < 2; ++col) out.sigma(r, col) += img.sigma(r, col) * c;
      out.delta[r] += img.delta[r] * c;
    }
  }
  return out;
}

Polynomial OreEvaluator::entry(int i, int j, const Polynomial& f) {
  OreImage img = apply(f);
  return j == 0 ? img.delta[i - 1] : img.sigma(i - 1, j - 1);
}

OreImage ore_apply(const StructureMaps& s, const Polynomial& f) {
  OreEvaluator ev(s);
  return ev.apply(f);
}

Mat2 sigma_apply(const StructureMaps& s, const Polynomial& f) { return ore_apply(s, f).sigma; }
Col2 delta_apply(const StructureMaps& s, const Polynomial& f) { return ore_apply(s, f).delta; }

ValidationReport validate_structure_maps(const StructureMaps& s) {
  ValidationReport report;
  const ContextPtr& ctx = s.context();
  const auto& names = ctx->generators();
  for (std::size_t i = 0; i < ctx->size(); ++i) {
    for (std::size_t j = i + 1; j < ctx->size(); ++j) {
      std::string pair = names[i] + "," + names[j];
      Mat2 hom = s.sigma(i) * s.sigma(j) - s.sigma(j) * s.sigma(i);
      report.record("hom", pair, hom.is_zero(), hom.to_string());
      Polynomial xi = Polynomial::generator(ctx, i);
      Polynomial xj = Polynomial::generator(ctx, j);
      Col2 der = (s.sigma(i) * s.delta(j) + s.delta(i) * xj) -
                 (s.sigma(j) * s.delta(i) + s.delta(j) * xi);
      report.record("derivation", pair, der.is_zero(), der.to_string());
    }
  }
  return report;
}

EndoDescription::EndoDescription(ContextPtr ctx, std::vector<Polynomial> images)
    : ctx_(std::move(ctx)), images_(std::move(images)) {
  if (images_.size() != ctx_->size()) {
    throw ArityError("endomorphism needs one image per generator");
  }
  for (const auto& p : images_) require_same(ctx_, p.context());
}

EndoDescription EndoDescription::identity(const ContextPtr& ctx) {
  std::vector<Polynomial> imgs;
  for (std::size_t i = 0; i < ctx->size(); ++i) imgs.push_back(Polynomial::generator(ctx, i));
  return EndoDescription(ctx, std::move(imgs));
}

Polynomial EndoDescription::apply(const Polynomial& f) const {
  require_same(ctx_, f.context());
  return f.substitute(images_);
}

EndoDescription EndoDescription::compose(const EndoDescription& other) const {
  std::vector<Polynomial> imgs;
  for (const auto& p : other.images_) imgs.push_back(apply(p));
  return EndoDescription(ctx_, std::move(imgs));
}

std::string to_string(Decision d) {
  switch (d) {
    case Decision::Yes:
      return "Yes";
    case Decision::No:
      return "No";
    case Decision::Unknown:
      break;
  }
  return "Unknown";
}

Decision is_automorphism(const EndoDescription& e) {
  const ContextPtr& ctx = e.context();
  const std::size_t n = ctx->size();
  if (n == 0) return Decision::Yes;
  if (n == 1) return e.images()[0].degree() == 1 ? Decision::Yes : Decision::No;

  bool affine = true;
  for (const auto& img : e.images()) {
    if (img.is_constant()) return Decision::No;
    if (img.degree() > 1) affine = false;
  }
  if (!affine) return Decision::Unknown;
  ScalarMatrix linear(ctx->field(), n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      linear(i, j) = e.images()[i].coefficient(Monomial::variable(n, j));
    }
  }
  return linear.determinant().is_zero() ? Decision::No : Decision::Yes;
}

}  // namespace doe
