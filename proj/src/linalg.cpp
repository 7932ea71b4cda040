#include "doe/linalg.hpp"

#include <algorithm>

#include "doe/errors.hpp"

namespace doe {

ScalarMatrix::ScalarMatrix(const FieldSpec& field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols),
      data_(rows * cols, FieldElement::zero(field)) {}

namespace {

// Row-reduces in place; returns pivot columns.
std::vector<std::size_t> row_reduce(std::vector<std::vector<FieldElement>>& m,
                                    std::size_t cols, FieldElement* det_sign = nullptr) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.size() && m[pivot][col].is_zero()) ++pivot;
    if (pivot == m.size()) continue;
    if (pivot != row) {
      std::swap(m[pivot], m[row]);
      if (det_sign) *det_sign = -*det_sign;
    }
    FieldElement inv = field_inv(m[row][col]);
    if (det_sign) *det_sign *= m[row][col];
    for (auto& v : m[row]) v *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col].is_zero()) continue;
      FieldElement f = m[r][col];
      for (std::size_t c = 0; c < m[r].size(); ++c) m[r][c] -= f * m[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::vector<std::vector<FieldElement>> to_rows(const ScalarMatrix& a) {
  std::vector<std::vector<FieldElement>> m;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    std::vector<FieldElement> row;
    for (std::size_t c = 0; c < a.cols(); ++c) row.push_back(a(r, c));
    m.push_back(std::move(row));
  }
  return m;
}

}  // namespace

FieldElement ScalarMatrix::determinant() const {
  if (rows_ != cols_) throw std::invalid_argument("determinant of a non-square matrix");
  auto m = to_rows(*this);
  FieldElement scale = FieldElement::one(field_);
  auto pivots = row_reduce(m, cols_, &scale);
  if (pivots.size() < rows_) return FieldElement::zero(field_);
  return scale;
}

std::size_t ScalarMatrix::rank() const {
  auto m = to_rows(*this);
  return row_reduce(m, cols_).size();
}

std::optional<LinearSolution> solve_linear(const ScalarMatrix& a,
                                           const std::vector<FieldElement>& b) {
  auto m = to_rows(a);
  for (std::size_t r = 0; r < m.size(); ++r) m[r].push_back(b[r]);
  auto pivots = row_reduce(m, a.cols() + 1);
  if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;

  const FieldSpec& f = a.field();
  LinearSolution sol;
  sol.particular.assign(a.cols(), FieldElement::zero(f));
  for (std::size_t r = 0; r < pivots.size(); ++r) sol.particular[pivots[r]] = m[r][a.cols()];
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (std::find(pivots.begin(), pivots.end(), free) != pivots.end()) continue;
    std::vector<FieldElement> v(a.cols(), FieldElement::zero(f));
    v[free] = FieldElement::one(f);
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][free];
    sol.nullspace.push_back(std::move(v));
  }
  return sol;
}

UniPoly::UniPoly(const FieldSpec& field, std::vector<FieldElement> coeffs)
    : field_(field), c_(std::move(coeffs)) {
  trim();
}

void UniPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

UniPoly UniPoly::from_polynomial(const Polynomial& p) {
  if (p.context()->size() != 1) {
    throw ContextMismatch("univariate view needs a one-generator context");
  }
  int d = p.degree();
  std::vector<FieldElement> c(d < 0 ? 0 : d + 1, FieldElement::zero(p.field()));
  for (const auto& [m, coeff] : p.terms()) c[m[0]] = coeff;
  return UniPoly(p.field(), std::move(c));
}

FieldElement UniPoly::operator()(const FieldElement& t) const {
  FieldElement acc = FieldElement::zero(field_);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

UniPoly UniPoly::monic() const {
  if (c_.empty()) return *this;
  FieldElement inv = field_inv(c_.back());
  std::vector<FieldElement> c = c_;
  for (auto& v : c) v *= inv;
  return UniPoly(field_, std::move(c));
}

UniPoly UniPoly::mod(const UniPoly& divisor) const {
  if (divisor.is_zero()) throw ZeroInverse();
  std::vector<FieldElement> r = c_;
  FieldElement lead_inv = field_inv(divisor.c_.back());
  const std::size_t dd = divisor.c_.size();
  while (r.size() >= dd) {
    FieldElement f = r.back() * lead_inv;
    std::size_t shift = r.size() - dd;
    for (std::size_t i = 0; i < dd; ++i) r[shift + i] -= f * divisor.c_[i];
    while (!r.empty() && r.back().is_zero()) r.pop_back();
  }
  return UniPoly(field_, std::move(r));
}

UniPoly UniPoly::divide_by_root(const FieldElement& root) const {
  // Synthetic division by (t - root); the remainder is discarded.
  if (c_.size() <= 1) return UniPoly(field_, {});
  std::vector<FieldElement> q(c_.size() - 1, FieldElement::zero(field_));
  FieldElement carry = FieldElement::zero(field_);
  for (std::size_t i = c_.size(); i-- > 1;) {
    carry = carry * root + c_[i];
    q[i - 1] = carry;
  }
  return UniPoly(field_, std::move(q));
}

UniPoly gcd(UniPoly a, UniPoly b) {
  while (!b.is_zero()) {
    UniPoly r = a.mod(b);
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

namespace {

std::vector<mpz_class> positive_divisors(mpz_class n) {
  if (n < 0) n = -n;
  std::vector<mpz_class> small, large;
  for (mpz_class d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d * d != n) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

std::vector<FieldElement> rational_roots(const UniPoly& p) {
  const FieldSpec& f = p.field();
  std::vector<FieldElement> found;
  UniPoly work = p;
  // Factor out t^k first; zero would break the divisor enumeration.
  if (work.coeff(0).is_zero()) {
    found.push_back(FieldElement::zero(f));
    while (!work.is_zero() && work.degree() > 0 && work.coeff(0).is_zero()) {
      work = work.divide_by_root(FieldElement::zero(f));
    }
  }
  if (work.degree() <= 0) return found;

  if (work.degree() <= 2) {
    if (work.degree() == 1) {
      found.push_back(-work.coeff(0) / work.coeff(1));
      return found;
    }
    const FieldElement& a = work.coeff(2);
    const FieldElement& b = work.coeff(1);
    const FieldElement& c = work.coeff(0);
    FieldElement disc = b * b - FieldElement(f, 4) * a * c;
    FieldElement root = FieldElement::zero(f);
    if (!disc.sqrt(root)) return found;
    FieldElement two_a = FieldElement(f, 2) * a;
    found.push_back((-b + root) / two_a);
    if (!root.is_zero()) found.push_back((-b - root) / two_a);
    return found;
  }

  // Clear denominators to a primitive integer polynomial.
  mpz_class lcm_den = 1;
  for (int i = 0; i <= work.degree(); ++i) {
    mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(),
            work.coeff(i).value().get_den().get_mpz_t());
  }
  std::vector<mpz_class> ints;
  for (int i = 0; i <= work.degree(); ++i) {
    mpq_class scaled = work.coeff(i).value() * lcm_den;
    ints.push_back(scaled.get_num());
  }
  for (const auto& num : positive_divisors(ints.front())) {
    for (const auto& den : positive_divisors(ints.back())) {
      for (int sign : {1, -1}) {
        FieldElement cand(f, num * sign, den);
        if (work(cand).is_zero()) found.push_back(cand);
      }
    }
  }
  return found;
}

}  // namespace

std::vector<FieldElement> roots(const UniPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("roots of the zero polynomial");
  const FieldSpec& f = p.field();
  std::vector<FieldElement> found;
  if (f.is_rationals()) {
    found = rational_roots(p);
  } else {
    for (std::uint64_t r = 0; r < f.modulus(); ++r) {
      FieldElement t(f, mpz_class(std::to_string(r)));
      if (p(t).is_zero()) found.push_back(t);
    }
  }
  std::sort(found.begin(), found.end(), scalar_less);
  found.erase(std::unique(found.begin(), found.end()), found.end());
  return found;
}

}  // namespace doe
