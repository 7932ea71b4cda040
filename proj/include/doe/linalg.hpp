#pragma once

#include <optional>
#include <vector>

#include "doe/field.hpp"
#include "doe/polynomial.hpp"

namespace doe {

/// Dense matrix over a field, row-major. Only what the presentation
/// search needs: determinants and exact solving of small systems.
class ScalarMatrix {
 public:
  ScalarMatrix(const FieldSpec& field, std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const FieldSpec& field() const { return field_; }
  FieldElement& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const FieldElement& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  FieldElement determinant() const;
  std::size_t rank() const;

 private:
  FieldSpec field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<FieldElement> data_;
};

/// Solution set of A x = b: a particular solution plus a nullspace basis.
struct LinearSolution {
  std::vector<FieldElement> particular;
  std::vector<std::vector<FieldElement>> nullspace;
};

/// Gauss-Jordan elimination; nullopt when inconsistent.
std::optional<LinearSolution> solve_linear(const ScalarMatrix& a,
                                           const std::vector<FieldElement>& b);

/// Dense univariate polynomial over a field, coefficients low to high.
class UniPoly {
 public:
  UniPoly(const FieldSpec& field, std::vector<FieldElement> coeffs);
  /// Reads a polynomial of a one-generator context.
  static UniPoly from_polynomial(const Polynomial& p);

  const FieldSpec& field() const { return field_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const FieldElement& coeff(std::size_t i) const { return c_[i]; }
  FieldElement operator()(const FieldElement& t) const;

  UniPoly monic() const;
  UniPoly mod(const UniPoly& divisor) const;
  UniPoly divide_by_root(const FieldElement& root) const;

 private:
  void trim();

  FieldSpec field_;
  std::vector<FieldElement> c_;
};

UniPoly gcd(UniPoly a, UniPoly b);

/// All distinct roots in the field, ascending. Over GF(p) by exhaustive
/// residue scan; over Q degree <= 2 by exact square-root test of the
/// discriminant and higher degrees by the rational root test.
std::vector<FieldElement> roots(const UniPoly& p);

}  // namespace doe
