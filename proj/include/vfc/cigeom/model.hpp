#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "vfc/algebra/multi_form.hpp"
#include "vfc/p1sheaf/splitting.hpp"

namespace vfc {

/// X = {F_1 = ... = F_l = 0} in P^n with boundary components D_j = {G_j = 0}.
struct CIModel {
  Field field;
  int n = 0;
  std::vector<MultiForm> equations;
  std::vector<MultiForm> boundaries;

  /// Validates variables, fields, degrees >= 1 and l + k <= n.
  static CIModel make(Field f, int n, std::vector<MultiForm> equations, std::vector<MultiForm> boundaries);

  int l() const { return static_cast<int>(equations.size()); }
  int k() const { return static_cast<int>(boundaries.size()); }
  /// No boundary degree is divisible by the characteristic.
  bool tame() const;
};

/// Factorization of G o phi. `in_boundary` marks a curve inside the
/// component, in which case there are no factors and total is 0.
struct ContactRecord {
  bool in_boundary = false;
  std::vector<std::pair<BinaryForm, int>> factors;
  int total = 0;

  /// Multiplicity at a point (0 if the factor list misses it).
  int order_at(const Point& pt) const;
};

bool lies_on(const RationalCurveMap& phi, const CIModel& x);
/// Throw Precondition unless phi lies on X.
bool smooth_along(const RationalCurveMap& phi, const CIModel& x);
bool log_smooth_along(const RationalCurveMap& phi, const CIModel& x);
std::vector<ContactRecord> boundary_contacts(const RationalCurveMap& phi, const CIModel& x);

/// O -> O(d)^(n+1) + O^k -> sum O(d d_i) + sum O(d d'_j) along phi.
FreeComplex restrict_log_tangent_complex(const CIModel& x, const RationalCurveMap& phi);
/// O(d)^(n+1) + O^(k-1) -> sum O(d d_i) + sum O(d d'_j). Needs k >= 1 and a
/// tame boundary; throws WildBoundary otherwise.
SheafMap restrict_log_tangent_kernel(const CIModel& x, const RationalCurveMap& phi);

/// Moves G_j into the equations.
CIModel induced_boundary_model(const CIModel& x, int j);

}  // namespace vfc
