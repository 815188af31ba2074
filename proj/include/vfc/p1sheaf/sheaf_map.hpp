#pragma once

#include <vector>

#include "vfc/algebra/binary_form.hpp"
#include "vfc/algebra/matrix.hpp"
#include "vfc/p1sheaf/free_sum.hpp"

namespace vfc {

/// A map of split bundles on P^1. Entry (j, i) maps O(source_i) to
/// O(target_j) and is a binary form of degree target_j - source_i (or zero).
class SheafMap {
 public:
  SheafMap() = default;
  static SheafMap zero(Field f, FreeSum source, FreeSum target);
  /// rows indexed by target summands, columns by source summands.
  static SheafMap make(Field f, FreeSum source, FreeSum target, std::vector<std::vector<BinaryForm>> rows);

  Field field() const { return field_; }
  const FreeSum& source() const { return source_; }
  const FreeSum& target() const { return target_; }
  const BinaryForm& entry(int j, int i) const { return entries_[static_cast<std::size_t>(j) * source_.rank() + i]; }
  void set_entry(int j, int i, BinaryForm f);
  bool is_zero() const;

  /// outer o inner
  friend SheafMap compose(const SheafMap& outer, const SheafMap& inner);

  /// The induced map H^0(source(m)) -> H^0(target(m)) in monomial bases
  /// s^(a-u) t^u, u = 0..a, summand by summand.
  Matrix global_sections(int m) const;
  /// The fiber map at a point (entries evaluated at its representative).
  Matrix at_point(const Point& pt) const;

 private:
  Field field_;
  FreeSum source_, target_;
  std::vector<BinaryForm> entries_;
};

/// Determinant of a square matrix of binary forms with homogeneous (graded)
/// entries, by fraction-free elimination.
BinaryForm determinant(std::vector<std::vector<BinaryForm>> m, Field f);

/// gcd of all maximal minors; zero when every minor vanishes. With
/// `stop_at_unit` the scan ends as soon as the gcd is a constant.
BinaryForm maximal_minor_gcd(const SheafMap& m, bool stop_at_unit);

/// Surjective on every fiber over the closure: maximal minors have unit gcd.
bool fiber_surjective(const SheafMap& m);

/// Injective on every fiber over the closure (a subbundle inclusion).
bool subbundle_inclusion(const SheafMap& m);

}  // namespace vfc
