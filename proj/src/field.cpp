#include "doe/field.hpp"

#include <charconv>

#include "doe/errors.hpp"

namespace doe {

namespace {

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  mpz_class z(std::to_string(p));
  return mpz_probab_prime_p(z.get_mpz_t(), 40) != 0;
}

mpz_class modulus_of(const FieldSpec& f) {
  return mpz_class(std::to_string(f.modulus()));
}

}  // namespace

FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (!is_prime(p)) {
    throw InvalidField("GF(p) requires a prime, got " + std::to_string(p));
  }
  return FieldSpec(Kind::PrimeField, p);
}

std::string FieldSpec::to_string() const {
  if (is_rationals()) return "Q";
  return "GF:" + std::to_string(p_);
}

FieldSpec FieldSpec::parse(const std::string& text) {
  if (text == "Q") return rationals();
  if (text.rfind("GF:", 0) == 0) {
    std::uint64_t p = 0;
    const char* first = text.data() + 3;
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, p);
    if (ec != std::errc() || ptr != last || first == last) {
      throw InvalidField("bad field modulus in '" + text + "'");
    }
    return prime(p);
  }
  throw InvalidField("unknown field '" + text + "' (expected Q or GF:<p>)");
}

FieldElement::FieldElement(const FieldSpec& field, long value)
    : field_(field), value_(value) {
  reduce();
}

FieldElement::FieldElement(const FieldSpec& field, const mpz_class& num,
                           const mpz_class& den)
    : field_(field) {
  if (field.is_rationals()) {
    if (den == 0) throw DivisorNotInvertible("division by zero");
    value_ = mpq_class(num, den);
    value_.canonicalize();
    return;
  }
  mpz_class p = modulus_of(field);
  mpz_class d = den % p;
  if (d < 0) d += p;
  if (d == 0) {
    throw DivisorNotInvertible("divisor " + den.get_str() +
                               " is not invertible in " + field.to_string());
  }
  mpz_class inv;
  mpz_invert(inv.get_mpz_t(), d.get_mpz_t(), p.get_mpz_t());
  mpz_class r = (num * inv) % p;
  if (r < 0) r += p;
  value_ = r;
}

void FieldElement::reduce() {
  if (field_.is_rationals()) {
    value_.canonicalize();
    return;
  }
  mpz_class p = modulus_of(field_);
  mpz_class r = value_.get_num() % p;
  if (r < 0) r += p;
  value_ = r;
}

void FieldElement::check_same(const FieldElement& other) const {
  if (!(field_ == other.field_)) {
    throw ContextMismatch("scalars from " + field_.to_string() + " and " +
                          other.field_.to_string());
  }
}

FieldElement FieldElement::operator-() const {
  FieldElement r = *this;
  r.value_ = -r.value_;
  r.reduce();
  return r;
}

FieldElement& FieldElement::operator+=(const FieldElement& rhs) {
  check_same(rhs);
  value_ += rhs.value_;
  reduce();
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& rhs) {
  check_same(rhs);
  value_ -= rhs.value_;
  reduce();
  return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& rhs) {
  check_same(rhs);
  value_ *= rhs.value_;
  reduce();
  return *this;
}

FieldElement& FieldElement::operator/=(const FieldElement& rhs) {
  check_same(rhs);
  return *this *= field_inv(rhs);
}

FieldElement FieldElement::pow(unsigned e) const {
  FieldElement result = one(field_);
  FieldElement base = *this;
  while (e) {
    if (e & 1U) result *= base;
    base *= base;
    e >>= 1U;
  }
  return result;
}

bool operator==(const FieldElement& a, const FieldElement& b) {
  return a.field_ == b.field_ && a.value_ == b.value_;
}

std::string FieldElement::to_string() const { return value_.get_str(); }

bool FieldElement::sqrt(FieldElement& root) const {
  if (field_.is_rationals()) {
    if (value_ < 0) return false;
    const mpz_class& n = value_.get_num();
    const mpz_class& d = value_.get_den();
    if (!mpz_perfect_square_p(n.get_mpz_t()) ||
        !mpz_perfect_square_p(d.get_mpz_t())) {
      return false;
    }
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
    root = FieldElement(field_, rn, rd);
    return true;
  }
  for (std::uint64_t r = 0; r < field_.modulus(); ++r) {
    FieldElement cand(field_, mpz_class(std::to_string(r)));
    if (cand * cand == *this) {
      root = cand;
      return true;
    }
  }
  return false;
}

FieldElement field_inv(const FieldElement& a) {
  if (a.is_zero()) throw ZeroInverse();
  const mpq_class& v = a.value();
  return FieldElement(a.field(), v.get_den(), v.get_num());
}

bool scalar_less(const FieldElement& a, const FieldElement& b) {
  return a.value() < b.value();
}

}  // namespace doe
