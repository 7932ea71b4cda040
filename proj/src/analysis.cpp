#include "doe/analysis.hpp"

#include <algorithm>
#include <set>
#include <tuple>

#include "doe/errors.hpp"

namespace doe {

namespace {

using Scalars3 = std::array<FieldElement, 3>;

FieldElement inverse_det(const BasisChange& b) {
  FieldElement d = b.m.determinant();
  if (d.is_zero()) throw SingularBasis();
  return field_inv(d);
}

BasisChange inverse(const BasisChange& b) {
  FieldElement inv = inverse_det(b);
  const FieldSpec& f = b.m.field();
  return BasisChange::from_rows(f, {{b(1, 1) * inv, -b(0, 1) * inv}, {-b(1, 0) * inv, b(0, 0) * inv}});
}

Mat2 lift(const ContextPtr& ctx, const BasisChange& b) {
  return Mat2(Polynomial(ctx, b(0, 0)), Polynomial(ctx, b(0, 1)), Polynomial(ctx, b(1, 0)),
              Polynomial(ctx, b(1, 1)));
}

// sigma -> M sigma M^-1, delta -> M delta.
StructureMaps conjugate(const StructureMaps& s, const BasisChange& m) {
  const ContextPtr& ctx = s.context();
  Mat2 mm = lift(ctx, m);
  Mat2 minv = lift(ctx, inverse(m));
  std::vector<Mat2> sig;
  std::vector<Col2> del;
  for (std::size_t g = 0; g < ctx->size(); ++g) {
    sig.push_back(mm * s.sigma(g) * minv);
    del.push_back(mm * s.delta(g));
  }
  return StructureMaps(ctx, std::move(sig), std::move(del));
}

BasisChange swap_matrix(const FieldSpec& f) {
  return BasisChange::from_rows(f, {{FieldElement::zero(f), FieldElement::one(f)},
                                    {FieldElement::one(f), FieldElement::zero(f)}});
}

DoubleExtSpec swap_data(const DoubleExtSpec& s) {
  if (!s.p11().is_zero()) throw PreconditionFailed("swap needs p11 = 0, got " + s.p11().to_string());
  if (s.p12().is_zero()) throw PreconditionFailed("swap needs p12 != 0");
  FieldElement inv = field_inv(s.p12());
  FieldElement neg = -inv;
  return DoubleExtSpec(conjugate(s.maps(), swap_matrix(s.field())), inv,
                       FieldElement::zero(s.field()),
                       {s.tau(0) * neg, s.tau(2) * neg, s.tau(1) * neg});
}

bool all_zero(const DoubleExtSpec& s, int i, int j) {
  for (const auto& p : s.generator_images(i, j)) {
    if (!p.is_zero()) return false;
  }
  return true;
}

ExtElement linear(const ContextPtr& ctx, const FieldElement& a, const FieldElement& b) {
  return a * ExtElement::y1(ctx) + b * ExtElement::y2(ctx);
}

Scalars3 top(const ExtElement& e) {
  auto c = [&](unsigned i, unsigned j) {
    Polynomial p = e.coefficient(i, j);
    if (!p.is_constant()) throw std::logic_error("quadratic part with non-scalar coefficient");
    return p.constant_term();
  };
  return {c(2, 0), c(1, 1), c(0, 2)};
}

// Top-degree product of u = u1 y1 + u2 y2 and w in the basis (y1^2, y1 y2, y2^2).
Scalars3 quad_product(const DoubleExtSpec& s, const ProjectiveDirection& u,
                      const ProjectiveDirection& w) {
  return {u.k * w.k + s.p11() * u.l * w.k, u.k * w.l + s.p12() * u.l * w.k, u.l * w.l};
}

ScalarMatrix columns(const FieldSpec& f, const std::vector<Scalars3>& cols) {
  ScalarMatrix a(f, 3, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    for (std::size_t r = 0; r < 3; ++r) a(r, c) = cols[c][r];
  }
  return a;
}

}  // namespace

BasisChange BasisChange::identity(const FieldSpec& f) {
  return from_rows(f, {{FieldElement::one(f), FieldElement::zero(f)},
                       {FieldElement::zero(f), FieldElement::one(f)}});
}

BasisChange BasisChange::from_rows(const FieldSpec& f,
                                   const std::vector<std::vector<FieldElement>>& rows) {
  if (rows.size() != 2 || rows[0].size() != 2 || rows[1].size() != 2) {
    throw ArityError("basis change must be a 2x2 matrix");
  }
  ScalarMatrix m(f, 2, 2);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) m(i, j) = rows[i][j];
  }
  return BasisChange{m};
}

bool BasisChange::is_identity() const {
  return m(0, 0).is_one() && m(0, 1).is_zero() && m(1, 0).is_zero() && m(1, 1).is_one();
}

std::string BasisChange::to_string() const {
  return "[[" + m(0, 0).to_string() + ", " + m(0, 1).to_string() + "], [" + m(1, 0).to_string() +
         ", " + m(1, 1).to_string() + "]]";
}

ValidatedSpec transform_newp_a(const ValidatedSpec& vs) {
  const DoubleExtSpec& s = vs.spec();
  if (!s.p12().is_one()) throw PreconditionFailed("newp-a needs p12 = 1, got " + s.p12().to_string());
  if (s.p11().is_zero()) throw PreconditionFailed("newp-a needs p11 != 0");
  const FieldSpec& f = s.field();
  FieldElement p = s.p11();
  auto m = BasisChange::from_rows(f, {{p, FieldElement::zero(f)}, {FieldElement::zero(f), FieldElement::one(f)}});
  return ValidatedSpec::validate(DoubleExtSpec(conjugate(s.maps(), m), FieldElement::one(f),
                                               FieldElement::one(f),
                                               {s.tau(0) * p, s.tau(1), s.tau(2) * p}));
}

NewpBResult transform_newp_b(const ValidatedSpec& vs) {
  const DoubleExtSpec& s = vs.spec();
  if (s.p12().is_one()) throw PreconditionFailed("newp-b needs p12 != 1");
  const FieldSpec& f = s.field();
  FieldElement q = s.p11() / (s.p12() - FieldElement::one(f));
  auto m = BasisChange::from_rows(f, {{FieldElement::one(f), FieldElement::zero(f)}, {q, FieldElement::one(f)}});
  auto out = ValidatedSpec::validate(DoubleExtSpec(conjugate(s.maps(), m), s.p12(),
                                                   FieldElement::zero(f),
                                                   {s.tau(0), s.tau(1) - s.tau(2) * q, s.tau(2)}));
  return NewpBResult{std::move(out), q};
}

ValidatedSpec canonicalize_parameter(const ValidatedSpec& vs) {
  const DoubleExtSpec& s = vs.spec();
  if (!s.p12().is_one()) return transform_newp_b(vs).spec;
  if (!s.p11().is_zero()) return transform_newp_a(vs);
  return vs;
}

ValidatedSpec swap_generators(const ValidatedSpec& vs) {
  return ValidatedSpec::validate(swap_data(vs.spec()));
}

ValidatedSpec change_basis(const ValidatedSpec& vs, const BasisChange& m) {
  const DoubleExtSpec& s = vs.spec();
  const ContextPtr& ctx = s.context();
  const FieldSpec& f = s.field();
  BasisChange minv = inverse(m);

  ExtElement z1 = linear(ctx, m(0, 0), m(0, 1));
  ExtElement z2 = linear(ctx, m(1, 0), m(1, 1));
  ExtElement z2z1 = nf_mul(vs, z2, z1);
  ExtElement z1z2 = nf_mul(vs, z1, z2);
  ExtElement z1z1 = nf_mul(vs, z1, z1);

  Scalars3 target = top(z2z1);
  std::vector<FieldElement> rhs(target.begin(), target.end());
  auto sol = solve_linear(columns(f, {top(z1z2), top(z1z1)}), rhs);
  if (!sol) {
    ExtElement z2z2 = nf_mul(vs, z2, z2);
    ScalarMatrix full = columns(f, {top(z1z1), top(z1z2), top(z2z2)});
    std::optional<std::string> gamma;
    if (full.rank() == 3) gamma = solve_linear(full, rhs)->particular[2].to_string();
    throw ShapeError("z2*z1 is not in the span of z1*z2 and z1^2 modulo lower terms" +
                         (gamma ? "; z2^2 coefficient " + *gamma : std::string()),
                     gamma);
  }
  FieldElement p12 = sol->particular[0];
  FieldElement p11 = sol->particular[1];
  ExtElement rest = z2z1 - p12 * z1z2 - p11 * z1z1;
  if (rest.degree() > 1) throw std::logic_error("quadratic part did not cancel");
  Polynomial r1 = rest.coefficient(1, 0);
  Polynomial r2 = rest.coefficient(0, 1);
  std::array<Polynomial, 3> tau{rest.coefficient(0, 0), r1 * minv(0, 0) + r2 * minv(1, 0),
                                r1 * minv(0, 1) + r2 * minv(1, 1)};
  DoubleExtSpec out(conjugate(s.maps(), m), p12, p11, tau);
  auto checked = ValidatedSpec::try_validate(out);
  if (!checked) throw ShapeError("re-presented data fails validation", std::nullopt);
  return *checked;
}

bool relations_hold_in(const ValidatedSpec& vs, const BasisChange& m, const DoubleExtSpec& t) {
  const ContextPtr& ctx = vs.context();
  std::array<ExtElement, 2> z{linear(ctx, m(0, 0), m(0, 1)), linear(ctx, m(1, 0), m(1, 1))};
  ExtElement lhs = nf_mul(vs, z[1], z[0]);
  ExtElement rhs = t.p12() * nf_mul(vs, z[0], z[1]) + t.p11() * nf_mul(vs, z[0], z[0]) +
                   t.tau(1) * z[0] + t.tau(2) * z[1] + ExtElement::constant(t.tau(0));
  if (!(lhs == rhs)) return false;
  for (std::size_t g = 0; g < ctx->size(); ++g) {
    ExtElement x = ExtElement::constant(Polynomial::generator(ctx, g));
    for (int i = 0; i < 2; ++i) {
      ExtElement want = t.maps().sigma(g)(i, 0) * z[0] + t.maps().sigma(g)(i, 1) * z[1] +
                        ExtElement::constant(t.maps().delta(g)[i]);
      if (!(nf_mul(vs, z[i], x) == want)) return false;
    }
  }
  return true;
}

ProjectiveDirection ProjectiveDirection::normalized(FieldElement k, FieldElement l) {
  if (l.is_zero()) {
    if (k.is_zero()) throw std::invalid_argument("direction (0:0)");
    return {FieldElement::one(k.field()), l};
  }
  return {k / l, FieldElement::one(l.field())};
}

std::string ProjectiveDirection::to_string() const {
  return "(" + k.to_string() + ":" + l.to_string() + ")";
}

bool direction_less(const ProjectiveDirection& a, const ProjectiveDirection& b) {
  // Affine directions (l = 1) by k, then the point at infinity.
  if (a.l.is_zero() != b.l.is_zero()) return b.l.is_zero();
  return scalar_less(a.k, b.k);
}

DirectionSet diag_directions(const DoubleExtSpec& s) {
  const FieldSpec& f = s.field();
  const ContextPtr& ctx = s.context();
  std::vector<Scalars3> triples;
  for (std::size_t g = 0; g < ctx->size(); ++g) {
    const Mat2& sg = s.maps().sigma(g);
    Polynomial alpha = -sg(0, 1);
    Polynomial beta = sg(0, 0) - sg(1, 1);
    Polynomial gamma = sg(1, 0);
    std::set<std::vector<std::uint32_t>> support;
    for (const auto* p : {&alpha, &beta, &gamma}) {
      for (const auto& [mono, c] : p->terms()) support.insert(mono.exponents());
    }
    for (const auto& e : support) {
      Monomial mono(e);
      triples.push_back({alpha.coefficient(mono), beta.coefficient(mono), gamma.coefficient(mono)});
    }
  }
  DirectionSet out;
  if (triples.empty()) {
    out.all = true;
    return out;
  }
  std::optional<UniPoly> g;
  bool infinity = true;
  for (const auto& [a, b, c] : triples) {
    if (!a.is_zero()) infinity = false;
    UniPoly q(f, {c, b, a});
    if (q.is_zero()) continue;
    g = g ? gcd(*g, q) : q.monic();
  }
  if (g && g->degree() > 0) {
    for (const auto& t : roots(*g)) out.directions.push_back({t, FieldElement::one(f)});
  }
  if (infinity) out.directions.push_back({FieldElement::one(f), FieldElement::zero(f)});
  std::sort(out.directions.begin(), out.directions.end(), direction_less);
  return out;
}

std::string to_string(IteratedOrePresentation::Order order) {
  return order == IteratedOrePresentation::Order::Y1First ? "y1-first" : "y2-first";
}

ExtElement IteratedOrePresentation::sigma2_inner() const {
  const ContextPtr& ctx = sigma1.context();
  return sigma2_inner_scalar * ExtElement::y1(ctx) + ExtElement::constant(sigma2_inner_tail);
}

ExtElement IteratedOrePresentation::d2_on_generator(std::size_t gen) const {
  return d2_on_A[gen].first * ExtElement::y1(sigma1.context()) + ExtElement::constant(d2_on_A[gen].second);
}

ExtElement IteratedOrePresentation::d2_inner() const {
  const ContextPtr& ctx = sigma1.context();
  return ExtElement::monomial(Polynomial(ctx, d2_inner_quad), 2, 0) +
         ExtElement::monomial(d2_inner_lin, 1, 0) + ExtElement::constant(d2_inner_con);
}

DoubleExtSpec IteratedOrePresentation::reconstruct() const {
  const ContextPtr& ctx = sigma1.context();
  std::vector<Mat2> sig;
  std::vector<Col2> del;
  for (std::size_t g = 0; g < ctx->size(); ++g) {
    sig.emplace_back(sigma1.images()[g], Polynomial(ctx), d2_on_A[g].first, sigma2_on_A.images()[g]);
    del.emplace_back(d1[g], d2_on_A[g].second);
  }
  DoubleExtSpec inner_first(StructureMaps(ctx, std::move(sig), std::move(del)), sigma2_inner_scalar,
                            d2_inner_quad, {d2_inner_con, d2_inner_lin, sigma2_inner_tail});
  if (order == Order::Y1First) return inner_first;
  return swap_data(inner_first);
}

Detection detect_y1_first(const ValidatedSpec& vs, const std::string& inner, const std::string& outer) {
  const DoubleExtSpec& s = vs.spec();
  const ContextPtr& ctx = s.context();
  Detection out;
  auto s12 = s.generator_images(1, 2);
  for (std::size_t g = 0; g < ctx->size(); ++g) {
    if (!s12[g].is_zero()) {
      out.violations.push_back("sigma12(" + ctx->generators()[g] + ") = " + s12[g].to_string() + " != 0");
    }
  }
  if (!out.violations.empty()) return out;
  std::vector<std::pair<Polynomial, Polynomial>> d2;
  auto s21 = s.generator_images(2, 1);
  auto del2 = s.generator_images(2, 0);
  for (std::size_t g = 0; g < ctx->size(); ++g) d2.emplace_back(s21[g], del2[g]);
  out.presentation = IteratedOrePresentation{
      IteratedOrePresentation::Order::Y1First,
      inner,
      outer,
      EndoDescription(ctx, s.generator_images(1, 1)),
      s.generator_images(1, 0),
      EndoDescription(ctx, s.generator_images(2, 2)),
      s.p12(),
      s.tau(2),
      std::move(d2),
      s.p11(),
      s.tau(1),
      s.tau(0)};
  return out;
}

Detection detect_y2_first(const ValidatedSpec& vs, const std::string& inner, const std::string& outer) {
  const DoubleExtSpec& s = vs.spec();
  const ContextPtr& ctx = s.context();
  Detection out;
  auto s21 = s.generator_images(2, 1);
  for (std::size_t g = 0; g < ctx->size(); ++g) {
    if (!s21[g].is_zero()) {
      out.violations.push_back("sigma21(" + ctx->generators()[g] + ") = " + s21[g].to_string() + " != 0");
    }
  }
  if (s.p12().is_zero()) out.violations.push_back("p12 = 0");
  if (!s.p11().is_zero()) out.violations.push_back("p11 = " + s.p11().to_string() + " != 0");
  if (!out.violations.empty()) return out;
  Detection swapped = detect_y1_first(swap_generators(vs), inner, outer);
  swapped.presentation->order = IteratedOrePresentation::Order::Y2First;
  return swapped;
}

std::string to_string(Classification::Kind kind) {
  switch (kind) {
    case Classification::Kind::DoubleExtension:
      return "DoubleExtension";
    case Classification::Kind::RightOnly:
      return "RightOnly";
    case Classification::Kind::Unknown:
      break;
  }
  return "Unknown";
}

Classification classify_double(const ValidatedSpec& vs) {
  const DoubleExtSpec& s = vs.spec();
  const ContextPtr& ctx = s.context();
  Classification out;
  if (s.p12().is_zero()) {
    out.kind = Classification::Kind::RightOnly;
    out.reasons.push_back("p12 = 0");
    return out;
  }
  bool lower = all_zero(s, 1, 2);
  bool upper = all_zero(s, 2, 1) && s.p11().is_zero();
  if (!lower && !upper) {
    out.reasons.push_back("sigma is not triangular");
    return out;
  }
  out.reasons.push_back(lower ? "sigma12 = 0" : "sigma21 = 0 and p11 = 0");
  Decision d11 = is_automorphism(EndoDescription(ctx, s.generator_images(1, 1)));
  Decision d22 = is_automorphism(EndoDescription(ctx, s.generator_images(2, 2)));
  out.reasons.push_back("sigma11 automorphism: " + to_string(d11));
  out.reasons.push_back("sigma22 automorphism: " + to_string(d22));
  if (d11 == Decision::No || d22 == Decision::No) {
    out.kind = Classification::Kind::RightOnly;
  } else if (d11 == Decision::Yes && d22 == Decision::Yes) {
    out.kind = Classification::Kind::DoubleExtension;
  }
  return out;
}

namespace {

struct Candidate {
  ProjectiveDirection w;
  ProjectiveDirection v;
};

ProjectiveDirection complement(const ProjectiveDirection& w) {
  const FieldSpec& f = w.k.field();
  if (w.l.is_one() && w.k.is_zero()) return {FieldElement::one(f), FieldElement::zero(f)};
  return {FieldElement::zero(f), FieldElement::one(f)};
}

// det[v w, w v, w^2] with v = y1, w = k y1 + y2, as a polynomial in k.
Polynomial shape_determinant(const DoubleExtSpec& s) {
  const FieldSpec& f = s.field();
  auto kctx = make_context(f, {"k"});
  Polynomial k = Polynomial::generator(kctx, 0);
  Polynomial one(kctx, 1);
  Polynomial zero(kctx);
  Polynomial p12(kctx, s.p12());
  Polynomial p11(kctx, s.p11());
  auto prod = [&](const std::array<Polynomial, 2>& u, const std::array<Polynomial, 2>& w) {
    return std::array<Polynomial, 3>{u[0] * w[0] + p11 * u[1] * w[0], u[0] * w[1] + p12 * u[1] * w[0],
                                     u[1] * w[1]};
  };
  std::array<Polynomial, 2> v{one, zero};
  std::array<Polynomial, 2> w{k, one};
  auto a = prod(v, w);
  auto b = prod(w, v);
  auto c = prod(w, w);
  return a[0] * (b[1] * c[2] - b[2] * c[1]) - b[0] * (a[1] * c[2] - a[2] * c[1]) +
         c[0] * (a[1] * b[2] - a[2] * b[1]);
}

std::vector<FieldElement> row(const ProjectiveDirection& d) { return {d.k, d.l}; }

std::vector<FieldElement> normalized_row(const ProjectiveDirection& d) {
  auto n = ProjectiveDirection::normalized(d.k, d.l);
  return {n.k, n.l};
}

}  // namespace

SearchResult search_presentations(const ValidatedSpec& vs) {
  const DoubleExtSpec& s = vs.spec();
  const FieldSpec& f = s.field();
  SearchResult out;

  std::vector<ProjectiveDirection> dirs;
  DirectionSet ds = diag_directions(s);
  if (!ds.all) {
    dirs = ds.directions;
  } else {
    UniPoly d = UniPoly::from_polynomial(shape_determinant(s));
    if (d.is_zero()) {
      out.family = true;
    } else {
      for (const auto& t : roots(d)) dirs.push_back({t, FieldElement::one(f)});
    }
    dirs.push_back({FieldElement::one(f), FieldElement::zero(f)});
    if (out.family) dirs.push_back({FieldElement::zero(f), FieldElement::one(f)});
    std::sort(dirs.begin(), dirs.end(), direction_less);
  }

  using Key = std::tuple<int, std::string, std::string>;
  std::set<Key> seen;
  auto key_of = [](IteratedOrePresentation::Order o, const ProjectiveDirection& a,
                   const ProjectiveDirection& b) {
    auto r1 = normalized_row(a);
    auto r2 = normalized_row(b);
    return Key{static_cast<int>(o), r1[0].to_string() + ":" + r1[1].to_string(),
               r2[0].to_string() + ":" + r2[1].to_string()};
  };

  for (const auto& w : dirs) {
    ProjectiveDirection v = complement(w);

    // y1-first: z1 = w, z2 = v.
    {
      auto m = BasisChange::from_rows(f, {row(w), row(v)});
      if (seen.insert(key_of(IteratedOrePresentation::Order::Y1First, w, v)).second) {
        try {
          auto re = change_basis(vs, m);
          bool id = m.is_identity();
          auto det = detect_y1_first(re, id ? "y1" : "z1", id ? "y2" : "z2");
          if (det.presentable()) out.found.push_back({m, w, *det.presentation});
        } catch (const ShapeError&) {
        }
      }
    }

    // y2-first: z2 = w, z1 = v + t w with t fixed by the top-degree shape.
    {
      Scalars3 wv = quad_product(s, w, v);
      Scalars3 vw = quad_product(s, v, w);
      Scalars3 ww = quad_product(s, w, w);
      Scalars3 neg_ww{-ww[0], -ww[1], -ww[2]};
      auto sol = solve_linear(columns(f, {vw, neg_ww}), {wv.begin(), wv.end()});
      if (!sol) continue;
      FieldElement p = sol->particular[0];
      FieldElement sv = sol->particular[1];
      if (p.is_zero()) continue;
      FieldElement t = FieldElement::zero(f);
      if (!p.is_one()) {
        t = sv / (FieldElement::one(f) - p);
      } else if (!sv.is_zero()) {
        continue;
      }
      ProjectiveDirection z1{v.k + t * w.k, v.l + t * w.l};
      auto m = BasisChange::from_rows(f, {row(z1), row(w)});
      if (!seen.insert(key_of(IteratedOrePresentation::Order::Y2First, z1, w)).second) continue;
      try {
        auto re = change_basis(vs, m);
        bool id = m.is_identity();
        auto det = detect_y2_first(re, id ? "y2" : "z2", id ? "y1" : "z1");
        if (det.presentable()) out.found.push_back({m, w, *det.presentation});
      } catch (const ShapeError&) {
      }
    }
  }
  std::stable_sort(out.found.begin(), out.found.end(), [](const auto& a, const auto& b) {
    return a.presentation.order < b.presentation.order;
  });
  return out;
}

ValidatedSpec associated_graded(const ValidatedSpec& vs) {
  ValidatedSpec nb = transform_newp_b(vs).spec;
  const DoubleExtSpec& s = nb.spec();
  const ContextPtr& ctx = s.context();
  StructureMaps maps(ctx, s.maps().sigma_images(), std::vector<Col2>(ctx->size(), Col2(ctx)));
  return ValidatedSpec::validate(
      DoubleExtSpec(maps, s.p12(), s.p11(), {Polynomial(ctx), Polynomial(ctx), Polynomial(ctx)}));
}

ScalarBase scalar_base_extension(const FieldElement& p12, const FieldElement& p11,
                                 const std::array<FieldElement, 3>& tau, ContextPtr base) {
  const FieldSpec& f = p12.field();
  if (!base) base = make_context(f, {});
  if (!(base->field() == f)) throw ContextMismatch("base field differs from parameter field");
  DoubleExtSpec spec(StructureMaps::trivial(base), p12, p11,
                     {Polynomial(base, tau[0]), Polynomial(base, tau[1]), Polynomial(base, tau[2])});
  auto vs = ValidatedSpec::validate(std::move(spec));
  auto det = detect_y1_first(vs, "x1", "x2");
  return ScalarBase{vs, *det.presentation, !p12.is_zero()};
}

ValidatedSpec example_b2(const FieldElement& a, const FieldElement& b, const FieldElement& c) {
  if (b.is_zero()) throw ZeroB();
  const FieldSpec& f = b.field();
  auto ctx = make_context(f, {"x"});
  Polynomial x = Polynomial::generator(ctx, 0);
  Polynomial x2 = x * x;
  Mat2 sigma(Polynomial(ctx), x * field_inv(b), x * b, Polynomial(ctx));
  Col2 delta(x2 * c, x2 * (-b * c));
  return ValidatedSpec::validate(DoubleExtSpec(StructureMaps(ctx, {sigma}, {delta}),
                                               -FieldElement::one(f), FieldElement::zero(f),
                                               {x2 * a, Polynomial(ctx), Polynomial(ctx)}));
}

}  // namespace doe
