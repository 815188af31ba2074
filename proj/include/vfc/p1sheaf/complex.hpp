#pragma once

#include <string>
#include <vector>

#include "vfc/p1sheaf/sheaf_map.hpp"

namespace vfc {

/// A complex of split bundles on P^1 with two or three terms. `position` is
/// the index of the term whose cohomology sheaf we care about: 0 for the
/// kernel of a single map, 1 for the middle of a three-term complex.
struct FreeComplex {
  std::vector<FreeSum> terms;
  std::vector<SheafMap> maps;
  int position = 0;

  static FreeComplex kernel_of(SheafMap b);
  static FreeComplex middle_of(SheafMap a, SheafMap b);

  Field field() const { return maps.front().field(); }
  int length() const { return static_cast<int>(terms.size()); }
  /// Rank and degree of the cohomology sheaf, assuming the complex is valid.
  int sheaf_rank() const;
  int sheaf_degree() const;
  /// Euler characteristic of the cohomology sheaf twisted by m.
  long chi(int m) const { return static_cast<long>(sheaf_degree()) + static_cast<long>(sheaf_rank()) * (m + 1); }
};

struct ComplexValidity {
  bool composite_zero = true;
  bool first_inclusion = true;  // three-term only
  bool last_surjective = true;

  bool ok() const { return composite_zero && first_inclusion && last_surjective; }
  /// Name of the first failed invariant, empty when ok.
  std::string failure() const;
};

ComplexValidity check_validity(const FreeComplex& cx);

/// Throws InvalidComplex naming the failed invariant.
void require_valid(const FreeComplex& cx);

}  // namespace vfc
