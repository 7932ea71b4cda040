#include "doctest.h"

#include "doe/errors.hpp"
#include "support.hpp"

using namespace doe;
using testing::Q;
using testing::S;

namespace {

StructureMaps b2_maps() { return testing::load_spec("b2_q_123.json").maps(); }

}  // namespace

TEST_CASE("sigma and delta of B2") {
  StructureMaps m = b2_maps();
  auto ctx = m.context();
  Polynomial x = Polynomial::generator(ctx, 0);
  CHECK(sigma_apply(m, x).to_string() == "[[0, 1/2*x], [2*x, 0]]");
  CHECK(sigma_apply(m, x * x).to_string() == "[[x^2, 0], [0, x^2]]");
  CHECK(sigma_apply(m, Polynomial(ctx, 1)) == Mat2::identity(ctx));
  CHECK(delta_apply(m, x).to_string() == "[3*x^2, -6*x^2]");
  CHECK(delta_apply(m, x * x).is_zero());
  CHECK(delta_apply(m, Polynomial(ctx, 1)).is_zero());
}

TEST_CASE("structure map validation") {
  CHECK(validate_structure_maps(b2_maps()).valid());
  auto ctx = make_context(Q(), {"x", "z"});
  Polynomial x = Polynomial::generator(ctx, 0);
  Polynomial z = Polynomial::generator(ctx, 1);
  Polynomial o(ctx);
  StructureMaps diag(ctx, {Mat2(z, o, o, z), Mat2(x, o, o, x)}, {Col2(ctx), Col2(ctx)});
  CHECK(validate_structure_maps(diag).valid());
  StructureMaps bad(ctx, {Mat2(o, x, x, o), Mat2(z, o, o, -z)}, {Col2(ctx), Col2(ctx)});
  auto r = validate_structure_maps(bad);
  CHECK_FALSE(r.valid());
  REQUIRE_FALSE(r.failures.empty());
  CHECK(r.failures[0].check == "hom");
  CHECK(r.failures[0].generator == "x,z");
  CHECK_THROWS_AS(StructureMaps(ctx, {Mat2(z, o, o, z)}, {Col2(ctx)}), ArityError);
}

TEST_CASE("det sigma") {
  auto b2 = testing::load_spec("b2_q_123.json");
  Polynomial x = Polynomial::generator(b2.context(), 0);
  CHECK(det_sigma_apply(b2, x) == x);
  auto q = testing::load_spec("qplane_over_kx.json");
  Polynomial xq = Polynomial::generator(q.context(), 0);
  CHECK(det_sigma_apply(q, xq) == xq);

  auto ctx = make_context(Q(), {"x"});
  Polynomial y = Polynomial::generator(ctx, 0);
  Polynomial o(ctx);
  DoubleExtSpec tri(StructureMaps(ctx, {Mat2(y * S(Q(), 2), o, y, y * S(Q(), 3))}, {Col2(ctx)}),
                    S(Q(), 5), S(Q(), 0), {o, o, o});
  // sigma22(sigma11(x)) = 3 * 2x
  CHECK(det_sigma_apply(tri, y) == y * S(Q(), 6));
}

TEST_CASE("automorphism decisions") {
  auto k1 = make_context(Q(), {"x"});
  auto px = [&](const char* s) { return parse_poly(s, k1); };
  CHECK(is_automorphism(EndoDescription(k1, {px("2*x + 1")})) == Decision::Yes);
  CHECK(is_automorphism(EndoDescription(k1, {px("x^2")})) == Decision::No);
  CHECK(is_automorphism(EndoDescription(k1, {px("3")})) == Decision::No);
  auto k2 = make_context(Q(), {"x", "z"});
  auto p2 = [&](const char* s) { return parse_poly(s, k2); };
  CHECK(is_automorphism(EndoDescription(k2, {p2("x + z^2"), p2("z")})) == Decision::Unknown);
  CHECK(is_automorphism(EndoDescription(k2, {p2("x + z"), p2("z - 1")})) == Decision::Yes);
  CHECK(is_automorphism(EndoDescription(k2, {p2("x + z"), p2("2*x + 2*z")})) == Decision::No);
  CHECK(is_automorphism(EndoDescription(k2, {p2("x"), p2("1")})) == Decision::No);
  CHECK(is_automorphism(EndoDescription(make_context(Q(), {}), {})) == Decision::Yes);
}

TEST_CASE("endomorphism composition") {
  auto ctx = make_context(Q(), {"x", "z"});
  EndoDescription a(ctx, {parse_poly("z", ctx), parse_poly("x", ctx)});
  EndoDescription b(ctx, {parse_poly("2*x", ctx), parse_poly("z + 1", ctx)});
  // a(b(x)) = a(2x) = 2z
  CHECK(a.compose(b).images()[0] == parse_poly("2*z", ctx));
  CHECK(a.compose(a) == EndoDescription::identity(ctx));
}

namespace {

// One generator: arbitrary images. Several: diagonal scalings, delta = 0.
StructureMaps random_maps(testing::Random& rnd, const ContextPtr& ctx, bool triangular) {
  std::vector<Mat2> sig;
  std::vector<Col2> del;
  if (ctx->size() == 1) {
    Polynomial s12 = triangular ? Polynomial(ctx) : rnd.poly(ctx, 2, 2);
    sig.emplace_back(rnd.poly(ctx, 2, 2), s12, rnd.poly(ctx, 2, 2), rnd.poly(ctx, 2, 2));
    del.emplace_back(rnd.poly(ctx, 2, 2), rnd.poly(ctx, 2, 2));
    return StructureMaps(ctx, sig, del);
  }
  for (std::size_t g = 0; g < ctx->size(); ++g) {
    Polynomial x = Polynomial::generator(ctx, g);
    const FieldSpec& f = ctx->field();
    sig.emplace_back(x * rnd.nonzero_scalar(f), Polynomial(ctx), Polynomial(ctx), x * rnd.nonzero_scalar(f));
    del.emplace_back(Polynomial(ctx), Polynomial(ctx));
  }
  return StructureMaps(ctx, sig, del);
}

}  // namespace

TEST_CASE("sigma and delta product laws on 100 random pairs") {
  testing::Random rnd(21);
  for (int i = 0; i < 100; ++i) {
    FieldSpec f = rnd.field();
    auto ctx = make_context(f, {"x"});
    StructureMaps m = random_maps(rnd, ctx, false);
    Polynomial a = rnd.poly(ctx, 3, 3), b = rnd.poly(ctx, 3, 3);
    OreImage ia = ore_apply(m, a), ib = ore_apply(m, b), iab = ore_apply(m, a * b);
    CHECK(iab.sigma == ia.sigma * ib.sigma);
    CHECK(iab.delta == ia.sigma * ib.delta + ia.delta * b);
  }
}

TEST_CASE("sigma and delta are linear") {
  testing::Random rnd(22);
  for (int i = 0; i < 50; ++i) {
    FieldSpec f = rnd.field();
    auto ctx = make_context(f, {"x"});
    StructureMaps m = random_maps(rnd, ctx, false);
    Polynomial a = rnd.poly(ctx), b = rnd.poly(ctx);
    FieldElement c = rnd.scalar(f);
    Polynomial combo = a * c + b;
    OreImage ia = ore_apply(m, a), ib = ore_apply(m, b), ic = ore_apply(m, combo);
    for (int r = 0; r < 2; ++r) {
      for (int s = 0; s < 2; ++s) CHECK(ic.sigma(r, s) == ia.sigma(r, s) * c + ib.sigma(r, s));
      CHECK(ic.delta[r] == ia.delta[r] * c + ib.delta[r]);
    }
  }
}

TEST_CASE("lower triangular sigma stays lower triangular on 100 random inputs") {
  testing::Random rnd(23);
  for (int i = 0; i < 100; ++i) {
    FieldSpec f = rnd.field();
    auto ctx = make_context(f, {"x"});
    StructureMaps m = random_maps(rnd, ctx, true);
    CHECK(sigma_apply(m, rnd.poly(ctx, 4, 4))(0, 1).is_zero());
  }
}

TEST_CASE("multivariate structure maps validate and obey the product law") {
  testing::Random rnd(24);
  for (int i = 0; i < 20; ++i) {
    auto ctx = make_context(Q(), {"x", "z"});
    StructureMaps m = random_maps(rnd, ctx, true);
    CHECK(validate_structure_maps(m).valid());
    Polynomial a = rnd.poly(ctx, 3, 2), b = rnd.poly(ctx, 3, 2);
    CHECK(sigma_apply(m, a * b) == sigma_apply(m, a) * sigma_apply(m, b));
  }
}
