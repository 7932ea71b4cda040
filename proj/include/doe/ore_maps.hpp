#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "doe/polynomial.hpp"
#include "doe/report.hpp"

namespace doe {

/// 2x2 matrix over the base algebra, row-major: (0,0)=s11, (0,1)=s12, ...
class Mat2 {
 public:
  explicit Mat2(const ContextPtr& ctx);
  Mat2(Polynomial s11, Polynomial s12, Polynomial s21, Polynomial s22);
  static Mat2 identity(const ContextPtr& ctx);

  const Polynomial& operator()(int i, int j) const { return e_[2 * i + j]; }
  Polynomial& operator()(int i, int j) { return e_[2 * i + j]; }
  const ContextPtr& context() const { return e_[0].context(); }

  Mat2 operator*(const Mat2& rhs) const;
  Mat2 operator-(const Mat2& rhs) const;
  bool is_zero() const;
  friend bool operator==(const Mat2&, const Mat2&) = default;
  std::string to_string() const;

 private:
  std::array<Polynomial, 4> e_;
};

/// Column of two base-algebra elements.
class Col2 {
 public:
  explicit Col2(const ContextPtr& ctx);
  Col2(Polynomial d1, Polynomial d2);

  const Polynomial& operator[](int i) const { return e_[i]; }
  Polynomial& operator[](int i) { return e_[i]; }

  Col2 operator+(const Col2& rhs) const;
  Col2 operator-(const Col2& rhs) const;
  Col2 operator*(const Polynomial& a) const;
  friend Col2 operator*(const Mat2& m, const Col2& c);
  bool is_zero() const;
  friend bool operator==(const Col2&, const Col2&) = default;
  std::string to_string() const;

 private:
  std::array<Polynomial, 2> e_;
};

/// Images of every base generator under the algebra homomorphism
/// sigma: A -> M_2(A) and the sigma-derivation delta: A -> A^2.
/// Values on arbitrary polynomials are derived, never stored.
class StructureMaps {
 public:
  StructureMaps(ContextPtr ctx, std::vector<Mat2> sigma, std::vector<Col2> delta);
  /// sigma(x) = diag(x, x), delta = 0 on every generator.
  static StructureMaps trivial(const ContextPtr& ctx);

  const ContextPtr& context() const { return ctx_; }
  const Mat2& sigma(std::size_t gen) const { return sigma_[gen]; }
  const Col2& delta(std::size_t gen) const { return delta_[gen]; }
  const std::vector<Mat2>& sigma_images() const { return sigma_; }
  const std::vector<Col2>& delta_images() const { return delta_; }

  friend bool operator==(const StructureMaps& a, const StructureMaps& b) {
    return *a.ctx_ == *b.ctx_ && a.sigma_ == b.sigma_ && a.delta_ == b.delta_;
  }

 private:
  ContextPtr ctx_;
  std::vector<Mat2> sigma_;
  std::vector<Col2> delta_;
};

/// sigma(f) and delta(f) together. For a monomial both come from the
/// multiplicative block map f |-> [[sigma(f), delta(f)], [0, f]].
struct OreImage {
  Mat2 sigma;
  Col2 delta;
};

OreImage ore_apply(const StructureMaps& s, const Polynomial& f);
Mat2 sigma_apply(const StructureMaps& s, const Polynomial& f);
Col2 delta_apply(const StructureMaps& s, const Polynomial& f);

/// Evaluates sigma/delta on polynomials with a per-monomial cache. Not
/// thread-safe; create one per computation.
class OreEvaluator {
 public:
  explicit OreEvaluator(const StructureMaps& maps);
  const OreImage& of_monomial(const Monomial& m);
  OreImage apply(const Polynomial& f);
  /// sigma_ij(f) for j in {1,2}; j == 0 gives delta_i(f).
  Polynomial entry(int i, int j, const Polynomial& f);

 private:
  const StructureMaps& maps_;
  std::map<Monomial, OreImage, DegLexGreater> cache_;
};

/// Commutation (hom) and derivation-compatibility residuals on every
/// generator pair.
ValidationReport validate_structure_maps(const StructureMaps& s);

/// An algebra endomorphism of A given by generator images.
class EndoDescription {
 public:
  EndoDescription(ContextPtr ctx, std::vector<Polynomial> images);
  static EndoDescription identity(const ContextPtr& ctx);

  const ContextPtr& context() const { return ctx_; }
  const std::vector<Polynomial>& images() const { return images_; }
  Polynomial apply(const Polynomial& f) const;
  /// this after other: (this o other)(f) = this(other(f)).
  EndoDescription compose(const EndoDescription& other) const;

  friend bool operator==(const EndoDescription& a, const EndoDescription& b) {
    return *a.ctx_ == *b.ctx_ && a.images_ == b.images_;
  }

 private:
  ContextPtr ctx_;
  std::vector<Polynomial> images_;
};

enum class Decision { Yes, No, Unknown };
std::string to_string(Decision d);

/// Automorphism test restricted to the decidable affine fragment.
Decision is_automorphism(const EndoDescription& e);

}  // namespace doe
