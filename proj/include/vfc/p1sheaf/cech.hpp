#pragma once

#include "vfc/p1sheaf/complex.hpp"

namespace vfc {

struct CohomologyDims {
  long h0 = 0;
  long h1 = 0;
  friend bool operator==(const CohomologyDims&, const CohomologyDims&) = default;
};

/// h^0 and h^1 of the cohomology sheaf of `cx` twisted by O(m). Validates
/// the complex first. Kernel complexes use the global-sections shortcut;
/// three-term complexes go through the Cech bicomplex.
CohomologyDims cech_cohomology(const FreeComplex& cx, int m);

/// As cech_cohomology, for a complex already known to be valid.
CohomologyDims cohomology_unchecked(const FreeComplex& cx, int m);

/// Always builds the two-chart Cech bicomplex (no shortcut, no validation).
/// Exposed for cross-checking the shortcut.
CohomologyDims cech_cohomology_full(const FreeComplex& cx, int m);

}  // namespace vfc
