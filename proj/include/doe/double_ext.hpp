#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "doe/ore_maps.hpp"
#include "doe/polynomial.hpp"
#include "doe/report.hpp"

namespace doe {

/// Data of a right double extension A_P[y1, y2; sigma, delta, tau]:
///   y2 y1 = p12 y1 y2 + p11 y1^2 + tau1 y1 + tau2 y2 + tau0
///   [y1; y2] a = sigma(a) [y1; y2] + delta(a).
/// Construction checks contexts only; relations are checked separately.
class DoubleExtSpec {
 public:
  DoubleExtSpec(StructureMaps maps, FieldElement p12, FieldElement p11,
                std::array<Polynomial, 3> tau);

  const ContextPtr& context() const { return maps_.context(); }
  const FieldSpec& field() const { return context()->field(); }
  const StructureMaps& maps() const { return maps_; }
  const FieldElement& p12() const { return p12_; }
  const FieldElement& p11() const { return p11_; }
  /// tau(0) = tau0 (free term), tau(1) multiplies y1, tau(2) multiplies y2.
  const Polynomial& tau(int k) const { return tau_[k]; }
  const std::array<Polynomial, 3>& tail() const { return tau_; }

  /// sigma_ij restricted to generators, as an endomorphism-like image list
  /// (j == 0 selects delta_i).
  std::vector<Polynomial> generator_images(int i, int j) const;

  friend bool operator==(const DoubleExtSpec&, const DoubleExtSpec&) = default;

 private:
  StructureMaps maps_;
  FieldElement p12_;
  FieldElement p11_;
  std::array<Polynomial, 3> tau_;
};

/// y1^i y2^j exponent pair.
using YMonomial = std::pair<unsigned, unsigned>;

/// Element sum a_ij y1^i y2^j of the free left A-module; no zero
/// coefficients are stored.
class ExtElement {
 public:
  explicit ExtElement(ContextPtr ctx);
  static ExtElement constant(const Polynomial& a);
  static ExtElement monomial(const Polynomial& a, unsigned i, unsigned j);
  static ExtElement y1(const ContextPtr& ctx) { return monomial(Polynomial(ctx, 1), 1, 0); }
  static ExtElement y2(const ContextPtr& ctx) { return monomial(Polynomial(ctx, 1), 0, 1); }

  const ContextPtr& context() const { return ctx_; }
  const std::map<YMonomial, Polynomial>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Polynomial coefficient(unsigned i, unsigned j) const;
  /// Max i+j over the support; -1 for zero.
  int degree() const;
  /// Part of y-degree exactly d.
  ExtElement homogeneous_part(int d) const;

  void add_term(unsigned i, unsigned j, const Polynomial& a);

  ExtElement operator-() const;
  ExtElement& operator+=(const ExtElement& rhs);
  ExtElement& operator-=(const ExtElement& rhs);
  friend ExtElement operator+(ExtElement a, const ExtElement& b) { return a += b; }
  friend ExtElement operator-(ExtElement a, const ExtElement& b) { return a -= b; }
  /// Left multiplication by a base element (exact: A acts on the left basis).
  friend ExtElement operator*(const Polynomial& a, const ExtElement& e);
  friend ExtElement operator*(const FieldElement& c, const ExtElement& e);

  friend bool operator==(const ExtElement& a, const ExtElement& b);

  /// Leading y-monomials first: "-y1*y2 + x^2". Names default to y1, y2.
  std::string to_string(const std::string& name1 = "y1", const std::string& name2 = "y2") const;

 private:
  ContextPtr ctx_;
  std::map<YMonomial, Polynomial> terms_;
};

/// Normal-form rewriting for a fixed spec. Uses the commutation rule to move
/// base elements left of y's and the y2 y1 rule to remove inversions, leftmost
/// first. Works on any spec; results are only reduction-order independent
/// when the spec validates. Holds caches, so use one instance per thread.
class Rewriter {
 public:
  explicit Rewriter(const DoubleExtSpec& spec);

  /// y_k * e for k in {1, 2}.
  ExtElement left_mul_y(int k, const ExtElement& e);
  ExtElement mul(const ExtElement& u, const ExtElement& v);
  /// Normal form of y2 * y1^i.
  const ExtElement& y2_times_y1_power(unsigned i);
  /// Number of rule applications performed so far.
  std::size_t steps() const { return steps_; }

 private:
  const DoubleExtSpec& spec_;
  OreEvaluator ore_;
  std::vector<ExtElement> y2y1_;
  std::size_t building_ = 0;
  std::size_t steps_ = 0;
};

/// The six identities R3.1-R3.6 evaluated at every generator.
ValidationReport validate_relations(const DoubleExtSpec& spec);

/// NF((y2 y1) g) - NF(y2 (y1 g)) for the generator g; the y2 y1 rule is
/// applied first on the left route, the commutation rule on the right route.
ExtElement resolve_overlap(const DoubleExtSpec& spec, std::size_t generator);

/// Structure-map, relation and overlap checks combined.
ValidationReport validate_all(const DoubleExtSpec& spec);

/// A spec whose relations have been checked. Only obtainable through
/// `validate`, so arithmetic never runs on a non-confluent system.
class ValidatedSpec {
 public:
  /// Throws UnvalidatedSpec with the first failure when any check fails.
  static ValidatedSpec validate(DoubleExtSpec spec);
  static std::optional<ValidatedSpec> try_validate(DoubleExtSpec spec,
                                                   ValidationReport* report = nullptr);

  const DoubleExtSpec& spec() const { return spec_; }
  const ContextPtr& context() const { return spec_.context(); }

 private:
  explicit ValidatedSpec(DoubleExtSpec spec) : spec_(std::move(spec)) {}
  DoubleExtSpec spec_;
};

ExtElement nf_mul(const ValidatedSpec& spec, const ExtElement& u, const ExtElement& v);

/// A letter of a word: a base generator, y1 or y2.
struct Letter {
  enum class Kind { Base, Y1, Y2 } kind;
  std::size_t base_index = 0;
};

ExtElement nf_reduce_word(const ValidatedSpec& spec, const std::vector<Letter>& word);

/// Parses and evaluates an expression in the base generators and y1, y2
/// (juxtaposition multiplies), e.g. "y2 y1 x" or "y1*x^2".
ExtElement parse_ext(const ValidatedSpec& spec, std::string_view text);

/// Evaluates -p11 s12 s11 + s22 s11 - p12 s12 s21 at f (rightmost first).
Polynomial det_sigma_apply(const DoubleExtSpec& spec, const Polynomial& f);

}  // namespace doe
