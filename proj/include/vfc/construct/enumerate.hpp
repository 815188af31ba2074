#pragma once

#include <cstddef>
#include <vector>

#include "vfc/cigeom/verdict.hpp"

namespace vfc {

struct FoundLine {
  RationalCurveMap line;
  FreenessVerdict verdict;
};

/// Every line of P^n(F_p), as the row space of a 2 x (n+1) matrix in reduced
/// row echelon form, in a fixed order.
std::vector<RationalCurveMap> all_lines(Field f, int n);

/// Lines of P^n(F_p) lying on X with their verdicts, at most max_count.
/// Needs a finite field.
std::vector<FoundLine> enumerate_lines(const CIModel& x, std::size_t max_count);

}  // namespace vfc
