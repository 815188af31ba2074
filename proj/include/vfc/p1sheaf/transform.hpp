#pragma once

#include "vfc/p1sheaf/splitting.hpp"

namespace vfc {

/// Sections whose value at `point` is killed by `functional` (q x r).
struct SkyscraperConstraint {
  Point point;
  Matrix functional;

  int q() const { return static_cast<int>(functional.rows()); }
};

/// The elementary transform E' = ker(E -> E|_P -> k^q).
struct ElementaryTransform {
  FreeSum ambient;
  SkyscraperConstraint constraint;
  /// E' as a split bundle together with its inclusion into E.
  FreeSum transform;
  SheafMap inclusion;
  SplittingType type;
  /// For column j of the inclusion: the summand of E it comes from, and
  /// whether it was lowered (pivot, multiplied by the point's linear form).
  std::vector<int> source_coord;
  std::vector<bool> lowered;

  /// h^0, h^1 of E'(m) from the constraint: kernel of the functional
  /// composed with evaluation on H^0(E(m)).
  CohomologyDims cohomology(int m) const;
};

/// Throws InvalidArgument when the functional is rank deficient and
/// DimensionMismatch when its width is not the rank of E.
ElementaryTransform elementary_transform(const FreeSum& e, const SkyscraperConstraint& c);

/// The linear form equal to 1 at pt that the transform uses to lift fiber
/// vectors (s when pt = (1:t0), t when pt = (0:1)).
BinaryForm unit_form_at(const Point& pt);

/// Matrix of v |-> v(pt) on H^0(E(m)) in the monomial bases of SheafMap.
Matrix evaluation_matrix(const FreeSum& e, int m, const Point& pt);

}  // namespace vfc
