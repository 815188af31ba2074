#pragma once

#include <map>
#include <string>
#include <vector>

#include "vfc/p1sheaf/cech.hpp"

namespace vfc {

/// The multiset {e_1 >= ... >= e_r} of a bundle O(e_1) + ... + O(e_r) on P^1.
struct SplittingType {
  std::vector<int> degrees;  // non-increasing

  static SplittingType from(std::vector<int> degrees);
  int rank() const { return static_cast<int>(degrees.size()); }
  int degree() const;
  int min_degree() const { return degrees.empty() ? 0 : degrees.back(); }
  long h0(int m) const;
  long h1(int m) const;
  /// "O(1)^2 + O^3 + O(-1)"; the rank-zero bundle renders as "0".
  std::string to_string() const;

  friend bool operator==(const SplittingType&, const SplittingType&) = default;
};

/// Recovers the type from h^0 values d(m), m in [lo, hi], via
/// #{e >= -m} = d(m) - d(m-1). Returns false if the values are not those of a
/// split bundle of the given rank and degree.
bool recover_splitting(const std::map<int, long>& d, int lo, int hi, int rank, int degree, SplittingType& out);

/// 1 + sum over all terms and summands of (|twist| + 1).
int scan_window(const FreeComplex& cx);

/// h^0 and h^1 of the cohomology sheaf at every twist in [lo, hi], each one
/// computed directly.
std::map<int, CohomologyDims> scan_cohomology(const FreeComplex& cx, int lo, int hi);

struct SplittingOptions {
  /// Compute every twist of the window directly. Otherwise twists past the
  /// last nonzero h^1 are filled in by Riemann-Roch and twists below the
  /// first zero h^0 by zero, which is exact for bundles on P^1.
  bool full_scan = false;
};

/// Splitting type of the cohomology sheaf of a valid complex. Throws
/// InvalidComplex for invalid input and Internal if reconstruction fails even
/// after widening the window once.
SplittingType splitting_type(const FreeComplex& cx, SplittingOptions opts = {});

}  // namespace vfc
