#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "vfc/cigeom/verdict.hpp"

namespace vfc {

/// (d_1, ..., d_l; d_b) in P^n, with e = d_b + sum d_i and m_j = sum_{i<=j} d_i.
struct DegreeProfile {
  int n = 0;
  std::vector<int> d;
  int d_b = 0;
  int e = 0;
  std::vector<int> m;  // m_0 .. m_{l+1}, m_{l+1} = e
  std::uint32_t p = 0;
  bool tame = true;

  int l() const { return static_cast<int>(d.size()); }
};

/// Throws InvalidArgument if some d_i < 1, d_b < 0 or e > n.
DegreeProfile validate_profile(int n, std::vector<int> d, int d_b, std::uint32_t p);

struct LineInstance {
  CIModel model;
  RationalCurveMap line;
  /// O(1)^(n+1-e) + O^(e-l-1); only claimed when d_b >= 1.
  std::optional<SplittingType> expected;
};

/// The explicit polynomials and the line {x_2 = ... = x_n = 0}. With d_b = 0
/// no boundary is emitted and no splitting is claimed.
LineInstance prop_line_instance(const DegreeProfile& profile, Field f);

/// phi composed with the degree-m cover of P^1 totally ramified at sigma and
/// one other point, fixing sigma. Throws WildCover when char divides m.
RationalCurveMap cover_compose(const RationalCurveMap& phi, int m, const Point& sigma);

}  // namespace vfc
