#pragma once

#include <vector>

#include "vfc/algebra/binary_form.hpp"

namespace vfc {

/// A morphism P^1 -> P^n given by n+1 binary forms of a common degree d >= 1
/// without common zero over the algebraic closure.
class RationalCurveMap {
 public:
  /// Validates the invariants; throws InvalidArgument on violation.
  static RationalCurveMap make(Field f, int n, std::vector<BinaryForm> components);
  /// The line s*P + t*Q through two distinct points given by coordinates.
  static RationalCurveMap line(Field f, const std::vector<Scalar>& p, const std::vector<Scalar>& q);

  Field field() const { return field_; }
  int n() const { return n_; }
  int degree() const { return degree_; }
  const std::vector<BinaryForm>& components() const { return components_; }
  const BinaryForm& component(int i) const { return components_[i]; }

  friend bool operator==(const RationalCurveMap& a, const RationalCurveMap& b) {
    return a.field_ == b.field_ && a.n_ == b.n_ && a.components_ == b.components_;
  }

 private:
  RationalCurveMap() = default;
  Field field_;
  int n_ = 0;
  int degree_ = 0;
  std::vector<BinaryForm> components_;
};

}  // namespace vfc
