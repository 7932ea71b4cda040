#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "doe/field.hpp"

namespace doe {

/// Coefficient field plus ordered generator names of a commutative
/// polynomial algebra K[x_1..x_n]. Shared immutably by every polynomial
/// built over it.
class BaseContext {
 public:
  BaseContext(FieldSpec field, std::vector<std::string> generators);

  const FieldSpec& field() const { return field_; }
  const std::vector<std::string>& generators() const { return generators_; }
  std::size_t size() const { return generators_.size(); }
  /// Index of a generator, or -1.
  int index_of(const std::string& name) const;

  friend bool operator==(const BaseContext&, const BaseContext&) = default;

 private:
  FieldSpec field_;
  std::vector<std::string> generators_;
};

using ContextPtr = std::shared_ptr<const BaseContext>;

ContextPtr make_context(FieldSpec field, std::vector<std::string> generators);

/// Throws ContextMismatch unless both contexts describe the same algebra.
void require_same(const ContextPtr& a, const ContextPtr& b);

/// Exponent vector over the context's generators.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<std::uint32_t> exponents);
  static Monomial one(std::size_t n) { return Monomial(std::vector<std::uint32_t>(n, 0)); }
  static Monomial variable(std::size_t n, std::size_t i);

  const std::vector<std::uint32_t>& exponents() const { return exp_; }
  std::uint32_t operator[](std::size_t i) const { return exp_[i]; }
  std::uint32_t degree() const { return degree_; }
  bool is_one() const { return degree_ == 0; }

  Monomial operator*(const Monomial& rhs) const;

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exp_ == b.exp_; }

 private:
  std::vector<std::uint32_t> exp_;
  std::uint32_t degree_ = 0;
};

/// Degree-lexicographic order, greatest first: higher total degree wins,
/// ties broken by the exponent of the earliest generator.
struct DegLexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Sparse exact polynomial over a BaseContext. Never stores zero
/// coefficients; terms iterate from the leading (deg-lex greatest) term.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, FieldElement, DegLexGreater>;

  explicit Polynomial(ContextPtr ctx);
  Polynomial(ContextPtr ctx, const FieldElement& constant);
  Polynomial(ContextPtr ctx, long constant);

  /// Merges like terms and drops zeros; the canonicalization entry point
  /// for raw term lists.
  static Polynomial from_terms(ContextPtr ctx,
                               std::span<const std::pair<Monomial, FieldElement>> terms);
  static Polynomial generator(ContextPtr ctx, std::size_t index);
  static Polynomial generator(ContextPtr ctx, const std::string& name);

  const ContextPtr& context() const { return ctx_; }
  const FieldSpec& field() const { return ctx_->field(); }
  const TermMap& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Constant term (zero if absent).
  FieldElement constant_term() const;
  FieldElement coefficient(const Monomial& m) const;
  /// Total degree; -1 for the zero polynomial.
  int degree() const;
  /// Degree in generator i; -1 for zero.
  int degree_in(std::size_t i) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Polynomial& rhs);
  Polynomial& operator*=(const FieldElement& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const FieldElement& c) { return a *= c; }
  friend Polynomial operator*(const FieldElement& c, Polynomial a) { return a *= c; }

  Polynomial pow(unsigned e) const;

  /// Substitutes images[i] for generator i. Images may live in another
  /// context over the same field.
  Polynomial substitute(const std::vector<Polynomial>& images) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

  /// Canonical rendering, leading term first: "2*x^2 - 1/3".
  std::string to_string() const;

 private:
  void add_term(const Monomial& m, const FieldElement& c);

  ContextPtr ctx_;
  TermMap terms_;
};

Polynomial poly_mul(const Polynomial& f, const Polynomial& g);
Polynomial poly_canonicalize(ContextPtr ctx,
                             std::span<const std::pair<Monomial, FieldElement>> terms);

/// Renders a monomial as "x^2*z" ("1" for the unit).
std::string monomial_to_string(const Monomial& m, const BaseContext& ctx);

}  // namespace doe
