#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace doe {

/// The coefficient field: either the rationals or a prime field GF(p).
class FieldSpec {
 public:
  enum class Kind { Rationals, PrimeField };

  static FieldSpec rationals() { return FieldSpec(Kind::Rationals, 0); }
  /// Throws InvalidField unless p is prime.
  static FieldSpec prime(std::uint64_t p);

  Kind kind() const { return kind_; }
  std::uint64_t modulus() const { return p_; }
  std::uint64_t characteristic() const { return p_; }
  bool is_rationals() const { return kind_ == Kind::Rationals; }

  /// "Q" or "GF:<p>"
  std::string to_string() const;
  /// Inverse of to_string.
  static FieldSpec parse(const std::string& text);

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  FieldSpec(Kind kind, std::uint64_t p) : kind_(kind), p_(p) {}

  Kind kind_;
  std::uint64_t p_;
};

/// An exact scalar of a FieldSpec. Over Q the value is a canonical GMP
/// rational; over GF(p) it is a residue in [0, p).
class FieldElement {
 public:
  FieldElement(const FieldSpec& field, long value);
  /// Maps num/den into the field; throws DivisorNotInvertible when den is
  /// zero in the field.
  FieldElement(const FieldSpec& field, const mpz_class& num,
               const mpz_class& den = 1);

  static FieldElement zero(const FieldSpec& f) { return {f, 0}; }
  static FieldElement one(const FieldSpec& f) { return {f, 1}; }

  const FieldSpec& field() const { return field_; }
  bool is_zero() const { return value_ == 0; }
  bool is_one() const { return value_ == 1; }
  /// Over Q: numerator/denominator. Over GF(p): residue/1.
  const mpq_class& value() const { return value_; }

  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& rhs);
  FieldElement& operator-=(const FieldElement& rhs);
  FieldElement& operator*=(const FieldElement& rhs);
  FieldElement& operator/=(const FieldElement& rhs);

  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
  friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }

  FieldElement pow(unsigned e) const;

  friend bool operator==(const FieldElement& a, const FieldElement& b);

  /// Canonical text: "3", "-1/3", residues in [0,p) for GF(p).
  std::string to_string() const;

  /// Over Q: is the value a square of a rational? Over GF(p) scans.
  /// Returns a square root when one exists.
  bool sqrt(FieldElement& root) const;

 private:
  void check_same(const FieldElement& other) const;
  void reduce();

  FieldSpec field_;
  mpq_class value_;
};

/// Throws ZeroInverse when a is zero.
FieldElement field_inv(const FieldElement& a);

/// Strict weak order used for deterministic sorting of scalars: numeric over
/// Q, residue order over GF(p).
bool scalar_less(const FieldElement& a, const FieldElement& b);

}  // namespace doe
