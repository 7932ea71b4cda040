#pragma once

#include <optional>
#include <string>
#include <vector>

#include "doe/double_ext.hpp"
#include "doe/linalg.hpp"

namespace doe {

// Transforms. Inputs are validated specs; outputs are re-validated.

/// y1 -> p11*y1. Requires p12 = 1 and p11 != 0; the result has P = {1, 1}.
ValidatedSpec transform_newp_a(const ValidatedSpec& spec);

struct NewpBResult {
  ValidatedSpec spec;
  FieldElement q;
};
/// y2 -> y2 + q*y1 with q = p11/(p12 - 1). Requires p12 != 1.
NewpBResult transform_newp_b(const ValidatedSpec& spec);

/// P = {1, 1} or P = {p12, 0}.
ValidatedSpec canonicalize_parameter(const ValidatedSpec& spec);

/// Interchanges y1 and y2. Requires p11 = 0 and p12 != 0.
ValidatedSpec swap_generators(const ValidatedSpec& spec);

/// Change of generators (z1, z2)^T = M (y1, y2)^T.
struct BasisChange {
  ScalarMatrix m;
  static BasisChange identity(const FieldSpec& f);
  /// Rows given as {{m11, m12}, {m21, m22}}.
  static BasisChange from_rows(const FieldSpec& f, const std::vector<std::vector<FieldElement>>& rows);
  FieldElement operator()(int i, int j) const { return m(i, j); }
  bool is_identity() const;
  /// "[[2, 1], [0, 1]]"
  std::string to_string() const;
};

/// Re-presents the algebra in the generators z = M y. Throws SingularBasis,
/// or ShapeError when z2 z1 is not of the form p12 z1 z2 + p11 z1^2 + lower.
ValidatedSpec change_basis(const ValidatedSpec& spec, const BasisChange& m);

/// Checks inside `source` (by nf_mul) that z = M y satisfy the quadratic
/// relation and the commutation rules declared by `target`.
bool relations_hold_in(const ValidatedSpec& source, const BasisChange& m,
                       const DoubleExtSpec& target);

// Normalizing directions z = k*y1 + l*y2 with z A contained in A z + A.

struct ProjectiveDirection {
  FieldElement k;
  FieldElement l;
  /// Scales to l = 1, or to (1:0).
  static ProjectiveDirection normalized(FieldElement k, FieldElement l);
  std::string to_string() const;
  friend bool operator==(const ProjectiveDirection&, const ProjectiveDirection&) = default;
};
bool direction_less(const ProjectiveDirection& a, const ProjectiveDirection& b);

struct DirectionSet {
  bool all = false;
  std::vector<ProjectiveDirection> directions;  // empty when all
};

DirectionSet diag_directions(const DoubleExtSpec& spec);

// Iterated Ore presentations A[inner; sigma1, d1][outer; sigma2, d2].

struct IteratedOrePresentation {
  enum class Order { Y1First, Y2First };
  Order order = Order::Y1First;
  std::string inner = "y1";
  std::string outer = "y2";
  EndoDescription sigma1;
  std::vector<Polynomial> d1;  // image of each base generator
  EndoDescription sigma2_on_A;
  FieldElement sigma2_inner_scalar;  // sigma2(inner) = scalar*inner + tail
  Polynomial sigma2_inner_tail;
  // d2(x) = d2_on_A[x].first * inner + d2_on_A[x].second
  std::vector<std::pair<Polynomial, Polynomial>> d2_on_A;
  // d2(inner) = quad*inner^2 + lin*inner + con
  FieldElement d2_inner_quad;
  Polynomial d2_inner_lin;
  Polynomial d2_inner_con;

  /// Elements of A[inner][outer] written in the inner/outer names.
  ExtElement sigma2_inner() const;
  ExtElement d2_on_generator(std::size_t gen) const;
  ExtElement d2_inner() const;
  /// The double-extension data the presentation came from.
  DoubleExtSpec reconstruct() const;
};

std::string to_string(IteratedOrePresentation::Order order);

struct Detection {
  std::optional<IteratedOrePresentation> presentation;
  std::vector<std::string> violations;  // empty iff presentable
  bool presentable() const { return presentation.has_value(); }
};

Detection detect_y1_first(const ValidatedSpec& spec, const std::string& inner = "y1",
                          const std::string& outer = "y2");
Detection detect_y2_first(const ValidatedSpec& spec, const std::string& inner = "y2",
                          const std::string& outer = "y1");

struct Classification {
  enum class Kind { DoubleExtension, RightOnly, Unknown };
  Kind kind = Kind::Unknown;
  std::vector<std::string> reasons;
};
std::string to_string(Classification::Kind kind);

Classification classify_double(const ValidatedSpec& spec);

struct FoundPresentation {
  BasisChange basis;
  ProjectiveDirection direction;  // the normalizing generator
  IteratedOrePresentation presentation;
};

struct SearchResult {
  std::vector<FoundPresentation> found;
  // Every direction passed the shape test; only representatives are listed.
  bool family = false;
};

SearchResult search_presentations(const ValidatedSpec& spec);

/// newp_b followed by dropping delta and tau. Requires p12 != 1.
ValidatedSpec associated_graded(const ValidatedSpec& spec);

struct ScalarBase {
  ValidatedSpec spec;
  IteratedOrePresentation presentation;
  bool double_extension;
};
/// P and scalar tail over K, or over `base` with sigma = diag(id, id) and
/// delta = 0.
ScalarBase scalar_base_extension(const FieldElement& p12, const FieldElement& p11,
                                 const std::array<FieldElement, 3>& tau,
                                 ContextPtr base = nullptr);

/// B^2(a, b, c) over K[x]. Throws ZeroB when b = 0.
ValidatedSpec example_b2(const FieldElement& a, const FieldElement& b, const FieldElement& c);

}  // namespace doe
