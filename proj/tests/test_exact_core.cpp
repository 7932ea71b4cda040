#include "doctest.h"

#include "doe/errors.hpp"
#include "doe/linalg.hpp"
#include "support.hpp"

using namespace doe;
using testing::Q;
using testing::S;

TEST_CASE("field elements over Q are canonical rationals") {
  FieldElement a(Q(), 2, 4);
  CHECK(a.to_string() == "1/2");
  CHECK((a + a).is_one());
  CHECK((S(Q(), -1, 3) * S(Q(), 3)).to_string() == "-1");
  CHECK(S(Q(), 6, -4).to_string() == "-3/2");
  CHECK_THROWS_AS(field_inv(FieldElement::zero(Q())), ZeroInverse);
  CHECK_THROWS_AS(FieldElement(Q(), 1, 0), DivisorNotInvertible);
}

TEST_CASE("prime fields reduce residues") {
  auto f = FieldSpec::prime(7);
  CHECK(S(f, -1).to_string() == "6");
  CHECK((S(f, 3) * S(f, 5)).to_string() == "1");
  CHECK(S(f, 1, 2).to_string() == "4");
  CHECK(field_inv(S(f, 3)) == S(f, 5));
  CHECK(S(f, 2).pow(3) == S(f, 1));
  CHECK_THROWS_AS(FieldElement(FieldSpec::prime(2), 1, 2), DivisorNotInvertible);
  CHECK_THROWS_AS(FieldSpec::prime(4), InvalidField);
  CHECK_THROWS_AS(FieldSpec::prime(1), InvalidField);
}

TEST_CASE("field specs print and parse") {
  CHECK(Q().to_string() == "Q");
  CHECK(FieldSpec::prime(2).to_string() == "GF:2");
  CHECK(FieldSpec::parse("GF:5") == FieldSpec::prime(5));
  CHECK(FieldSpec::parse("Q") == Q());
  CHECK_THROWS_AS(FieldSpec::parse("R"), InvalidField);
  CHECK_THROWS_AS(FieldSpec::parse("GF:9"), InvalidField);
}

TEST_CASE("mixing fields is refused") {
  CHECK_THROWS_AS(S(Q(), 1) + S(FieldSpec::prime(3), 1), ContextMismatch);
  auto a = make_context(Q(), {"x"});
  auto b = make_context(Q(), {"z"});
  CHECK_THROWS_AS(Polynomial::generator(a, 0) + Polynomial::generator(b, 0), ContextMismatch);
}

TEST_CASE("square roots") {
  FieldElement r = FieldElement::zero(Q());
  CHECK(S(Q(), 9, 4).sqrt(r));
  CHECK(r * r == S(Q(), 9, 4));
  CHECK_FALSE(S(Q(), 2).sqrt(r));
  CHECK_FALSE(S(Q(), -4).sqrt(r));
  auto f = FieldSpec::prime(5);
  FieldElement s = FieldElement::zero(f);
  CHECK(S(f, 4).sqrt(s));
  CHECK(s * s == S(f, 4));
  CHECK_FALSE(S(f, 2).sqrt(s));
}

TEST_CASE("polynomial printing and parsing") {
  auto ctx = make_context(Q(), {"x", "z"});
  Polynomial p = parse_poly("2*x^2 - 1/3", ctx);
  CHECK(p.coefficient(Monomial({2, 0})) == S(Q(), 2));
  CHECK(p.constant_term() == S(Q(), -1, 3));
  CHECK(p.to_string() == "2*x^2 - 1/3");
  CHECK(parse_poly("1/2*x", ctx).to_string() == "1/2*x");
  CHECK(parse_poly("(x + z)^2", ctx).to_string() == "x^2 + 2*x*z + z^2");
  CHECK(parse_poly("-(x - 1)", ctx).to_string() == "-x + 1");
  CHECK(parse_poly("x*z - z*x", ctx).is_zero());
  CHECK(parse_poly("0", ctx).to_string() == "0");
  CHECK(parse_poly(" 3 ", ctx).is_constant());
}

TEST_CASE("polynomial parse errors") {
  auto ctx = make_context(Q(), {"x"});
  CHECK_THROWS_AS(parse_poly("y + 1", ctx), UnknownGenerator);
  CHECK_THROWS_AS(parse_poly("x +", ctx), SyntaxError);
  CHECK_THROWS_AS(parse_poly("(x", ctx), SyntaxError);
  CHECK_THROWS_AS(parse_poly("x x", ctx), SyntaxError);
  CHECK_THROWS_AS(parse_poly("1/2*x", make_context(FieldSpec::prime(2), {"x"})), DivisorNotInvertible);
  try {
    parse_poly("x + * 2", ctx);
    FAIL("expected a syntax error");
  } catch (const SyntaxError& e) {
    CHECK(e.position() == 4);
  }
}

TEST_CASE("scalars reject generators") {
  CHECK(parse_scalar("-1", Q()) == S(Q(), -1));
  CHECK(parse_scalar("1/2", Q()) == S(Q(), 1, 2));
  CHECK_THROWS_AS(parse_scalar("x", Q()), UnknownGenerator);
}

TEST_CASE("ring axioms on 200 random triples") {
  testing::Random rnd(11);
  for (int i = 0; i < 200; ++i) {
    FieldSpec f = rnd.field();
    auto ctx = make_context(f, {"x", "z"});
    Polynomial a = rnd.poly(ctx), b = rnd.poly(ctx), c = rnd.poly(ctx);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK(a + b == b + a);
    CHECK((a - a).is_zero());
    CHECK(a * Polynomial(ctx, 1) == a);
  }
}

TEST_CASE("parse of print is the identity on 200 random polynomials") {
  testing::Random rnd(12);
  for (int i = 0; i < 200; ++i) {
    FieldSpec f = rnd.field();
    auto ctx = make_context(f, {"x", "z", "w"});
    Polynomial p = rnd.poly(ctx, 5, 4);
    CHECK(parse_poly(p.to_string(), ctx) == p);
  }
}

TEST_CASE("substitution") {
  auto ctx = make_context(Q(), {"x", "z"});
  Polynomial p = parse_poly("x^2*z + 1", ctx);
  std::vector<Polynomial> img{parse_poly("z + 1", ctx), parse_poly("2*x", ctx)};
  CHECK(p.substitute(img) == parse_poly("2*x*(z + 1)^2 + 1", ctx));
  auto k = make_context(Q(), {});
  CHECK(Polynomial(k, 5).substitute({}) == Polynomial(k, 5));
}

TEST_CASE("linear algebra") {
  ScalarMatrix m(Q(), 2, 2);
  m(0, 0) = S(Q(), 2);
  m(0, 1) = S(Q(), 1);
  m(1, 1) = S(Q(), 1);
  CHECK(m.determinant() == S(Q(), 2));
  CHECK(m.rank() == 2);
  auto sol = solve_linear(m, {S(Q(), 3), S(Q(), 1)});
  REQUIRE(sol);
  CHECK(sol->particular[0] == S(Q(), 1));
  CHECK(sol->particular[1] == S(Q(), 1));

  ScalarMatrix over(Q(), 2, 1);
  over(0, 0) = S(Q(), 1);
  over(1, 0) = S(Q(), 1);
  CHECK_FALSE(solve_linear(over, {S(Q(), 1), S(Q(), 2)}));
  auto under = solve_linear(over, {S(Q(), 1), S(Q(), 1)});
  REQUIRE(under);
  CHECK(under->nullspace.empty());
}

TEST_CASE("roots") {
  // t^2 - 4 over Q
  UniPoly p(Q(), {S(Q(), -4), S(Q(), 0), S(Q(), 1)});
  auto r = roots(p);
  REQUIRE(r.size() == 2);
  CHECK(r[0] == S(Q(), -2));
  CHECK(r[1] == S(Q(), 2));
  // t^2 - 2 has no rational roots
  CHECK(roots(UniPoly(Q(), {S(Q(), -2), S(Q(), 0), S(Q(), 1)})).empty());
  // (t - 1/2)(t + 3) t^2 (t - 2) = degree 5, rational root test
  auto ctx = make_context(Q(), {"t"});
  auto big = UniPoly::from_polynomial(parse_poly("(t - 1/2)*(t + 3)*t^2*(t - 2)", ctx));
  auto rb = roots(big);
  REQUIRE(rb.size() == 4);
  CHECK(rb[0] == S(Q(), -3));
  CHECK(rb[1] == S(Q(), 0));
  CHECK(rb[2] == S(Q(), 1, 2));
  CHECK(rb[3] == S(Q(), 2));
  auto g2 = FieldSpec::prime(2);
  auto rg = roots(UniPoly(g2, {S(g2, 1), S(g2, 0), S(g2, 1)}));
  REQUIRE(rg.size() == 1);
  CHECK(rg[0].is_one());
  UniPoly a(Q(), {S(Q(), -1), S(Q(), 0), S(Q(), 1)});
  UniPoly b(Q(), {S(Q(), -1), S(Q(), 1)});
  CHECK(gcd(a, b).degree() == 1);
}
