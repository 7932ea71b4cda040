#pragma once

#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "doe/analysis.hpp"
#include "doe/expression.hpp"
#include "doe/spec_io.hpp"

namespace testing {

using namespace doe;

inline std::string data_path(const std::string& name) { return std::string(DOE_DATA_DIR) + "/" + name; }

inline std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline DoubleExtSpec load_spec(const std::string& name) { return parse_spec(slurp(data_path(name))); }

inline const std::vector<std::string>& shipped_valid() {
  static const std::vector<std::string> names{"b2_q_123.json", "b2_gf2.json", "qplane_over_kx.json",
                                              "k_p21.json", "jordan.json"};
  return names;
}

inline const FieldSpec& Q() {
  static const FieldSpec f = FieldSpec::rationals();
  return f;
}

inline FieldElement S(const FieldSpec& f, long n, long d = 1) { return FieldElement(f, n, d); }

class Random {
 public:
  explicit Random(unsigned seed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  bool coin() { return integer(0, 1) == 1; }

  FieldElement scalar(const FieldSpec& f) {
    if (!f.is_rationals()) return S(f, integer(0, static_cast<long>(f.modulus()) - 1));
    return S(f, integer(-5, 5), integer(1, 3));
  }

  FieldElement nonzero_scalar(const FieldSpec& f) {
    for (;;) {
      FieldElement c = scalar(f);
      if (!c.is_zero()) return c;
    }
  }

  Polynomial poly(const ContextPtr& ctx, int max_terms = 4, unsigned max_exp = 3) {
    Polynomial p(ctx);
    int n = static_cast<int>(integer(0, max_terms));
    for (int t = 0; t < n; ++t) {
      Polynomial term(ctx, scalar(ctx->field()));
      for (std::size_t g = 0; g < ctx->size(); ++g) {
        term *= Polynomial::generator(ctx, g).pow(static_cast<unsigned>(integer(0, max_exp)));
      }
      p += term;
    }
    return p;
  }

  ExtElement element(const ContextPtr& ctx, int max_terms = 3, unsigned max_y = 3,
                     unsigned max_exp = 3) {
    ExtElement e(ctx);
    int n = static_cast<int>(integer(1, max_terms));
    for (int t = 0; t < n; ++t) {
      e.add_term(static_cast<unsigned>(integer(0, max_y)), static_cast<unsigned>(integer(0, max_y)),
                 poly(ctx, 2, max_exp));
    }
    return e;
  }

  FieldSpec field() {
    static const std::vector<long> primes{2, 3, 5, 7};
    if (integer(0, 2) == 0) return FieldSpec::prime(primes[integer(0, 3)]);
    return Q();
  }

  ValidatedSpec b2(const FieldSpec& f) {
    return example_b2(scalar(f), nonzero_scalar(f), scalar(f));
  }

  // sigma = diag(l1 x, l2 x), delta = 0, scalar tail; terms are kept only
  // when the relations allow them.
  ValidatedSpec diagonal(const FieldSpec& f) {
    auto ctx = make_context(f, {"x"});
    Polynomial x = Polynomial::generator(ctx, 0);
    FieldElement one = FieldElement::one(f);
    FieldElement l1 = coin() ? one : nonzero_scalar(f);
    FieldElement l2 = coin() ? one : (coin() ? l1 : nonzero_scalar(f));
    FieldElement p11 = (l1 == l2) ? scalar(f) : FieldElement::zero(f);
    FieldElement t0 = (l1 * l2).is_one() ? scalar(f) : FieldElement::zero(f);
    FieldElement t1 = l2.is_one() ? scalar(f) : FieldElement::zero(f);
    FieldElement t2 = l1.is_one() ? scalar(f) : FieldElement::zero(f);
    Mat2 sigma(x * l1, Polynomial(ctx), Polynomial(ctx), x * l2);
    DoubleExtSpec s(StructureMaps(ctx, {sigma}, {Col2(ctx)}), nonzero_scalar(f), p11,
                    {Polynomial(ctx, t0), Polynomial(ctx, t1), Polynomial(ctx, t2)});
    return ValidatedSpec::validate(s);
  }

  ValidatedSpec scalar_base(const FieldSpec& f) {
    std::vector<std::string> gens;
    long n = integer(0, 2);
    if (n >= 1) gens.push_back("x");
    if (n >= 2) gens.push_back("z");
    return scalar_base_extension(scalar(f), scalar(f), {scalar(f), scalar(f), scalar(f)},
                                 make_context(f, gens))
        .spec;
  }

  // y1 x = x y1 + w, y2 x = x y2 + c w, y2 y1 = y1 y2.
  ValidatedSpec weyl(const FieldSpec& f) {
    auto ctx = make_context(f, {"x"});
    Polynomial x = Polynomial::generator(ctx, 0);
    Polynomial w(ctx, scalar(f));
    Mat2 sigma(x, Polynomial(ctx), Polynomial(ctx), x);
    Col2 delta(w, w * scalar(f));
    DoubleExtSpec s(StructureMaps(ctx, {sigma}, {delta}), FieldElement::one(f), FieldElement::zero(f),
                    {Polynomial(ctx), Polynomial(ctx), Polynomial(ctx)});
    return ValidatedSpec::validate(s);
  }

  ValidatedSpec any_valid() {
    FieldSpec f = field();
    switch (integer(0, 3)) {
      case 0:
        return b2(f);
      case 1:
        return diagonal(f);
      case 2:
        return scalar_base(f);
      default:
        return weyl(f);
    }
  }

  std::mt19937& engine() { return rng_; }

 private:
  std::mt19937 rng_;
};

}  // namespace testing
