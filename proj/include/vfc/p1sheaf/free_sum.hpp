#pragma once

#include <numeric>
#include <string>
#include <vector>

namespace vfc {

/// The bundle O(a_1) + ... + O(a_r) on P^1. The order of summands is fixed so
/// that matrices index consistently.
struct FreeSum {
  std::vector<int> twists;

  int rank() const { return static_cast<int>(twists.size()); }
  int degree() const { return std::accumulate(twists.begin(), twists.end(), 0); }
  FreeSum twisted(int m) const {
    FreeSum r = *this;
    for (int& a : r.twists) a += m;
    return r;
  }
  long h0(int m = 0) const {
    long s = 0;
    for (int a : twists) s += std::max(0, a + m + 1);
    return s;
  }
  long h1(int m = 0) const {
    long s = 0;
    for (int a : twists) s += std::max(0, -a - m - 1);
    return s;
  }

  friend bool operator==(const FreeSum&, const FreeSum&) = default;
};

inline FreeSum concat(const FreeSum& a, const FreeSum& b) {
  FreeSum r = a;
  r.twists.insert(r.twists.end(), b.twists.begin(), b.twists.end());
  return r;
}

inline FreeSum repeated(int twist, int count) { return FreeSum{std::vector<int>(std::max(0, count), twist)}; }

}  // namespace vfc
