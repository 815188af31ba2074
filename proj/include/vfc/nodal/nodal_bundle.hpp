#pragma once

#include <vector>

#include "vfc/p1sheaf/transform.hpp"

namespace vfc {

/// A bundle on C = C_1 u C_2 glued at a node: split bundles on each
/// component and the identification v_left = glue * v_right of the fibers at
/// the node (each fiber in the monomial frame of its FreeSum, evaluated at
/// the stored representative of the node).
struct NodalBundle {
  FreeSum left, right;
  Point node_left, node_right;
  Matrix glue;

  int rank() const { return left.rank(); }
  int degree() const { return left.degree() + right.degree(); }
};

/// Throws InvalidArgument for mismatched ranks or a singular gluing.
void require_valid(const NodalBundle& b);

/// h^0 and h^1 of b(-D_left - D_right), where the divisors are lists of
/// points on each component away from the node (repeats allowed), by
/// Mayer-Vietoris.
CohomologyDims nodal_cohomology(const NodalBundle& b, const std::vector<Point>& divisor_left = {},
                                const std::vector<Point>& divisor_right = {});

}  // namespace vfc
