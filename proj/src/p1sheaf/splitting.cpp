#include "vfc/p1sheaf/splitting.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <numeric>

#include "vfc/error.hpp"

namespace vfc {

SplittingType SplittingType::from(std::vector<int> degrees) {
  std::sort(degrees.begin(), degrees.end(), std::greater<>());
  return SplittingType{std::move(degrees)};
}

int SplittingType::degree() const { return std::accumulate(degrees.begin(), degrees.end(), 0); }

long SplittingType::h0(int m) const {
  long s = 0;
  for (int e : degrees) s += std::max(0, e + m + 1);
  return s;
}

long SplittingType::h1(int m) const {
  long s = 0;
  for (int e : degrees) s += std::max(0, -e - m - 1);
  return s;
}

std::string SplittingType::to_string() const {
  if (degrees.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < degrees.size();) {
    std::size_t j = i;
    while (j < degrees.size() && degrees[j] == degrees[i]) ++j;
    if (!out.empty()) out += " + ";
    out += degrees[i] == 0 ? "O" : "O(" + std::to_string(degrees[i]) + ")";
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

bool recover_splitting(const std::map<int, long>& d, int lo, int hi, int rank, int degree, SplittingType& out) {
  auto at = [&](int m) { return d.at(m); };
  if (at(lo) != 0) return false;
  std::vector<int> degs;
  long prev_ge = 0;  // #{e >= -(m-1)}
  for (int m = lo + 1; m <= hi; ++m) {
    const long ge = at(m) - at(m - 1);
    const long exact = ge - prev_ge;  // #{e == -m}
    if (exact < 0) return false;
    for (long c = 0; c < exact; ++c) degs.push_back(-m);
    prev_ge = ge;
  }
  SplittingType t = SplittingType::from(std::move(degs));
  if (t.rank() != rank || t.degree() != degree) return false;
  for (int m = lo; m <= hi; ++m)
    if (t.h0(m) != at(m)) return false;
  out = std::move(t);
  return true;
}

int scan_window(const FreeComplex& cx) {
  int w = 1;
  for (const auto& t : cx.terms)
    for (int a : t.twists) w += std::abs(a) + 1;
  return w;
}

std::map<int, CohomologyDims> scan_cohomology(const FreeComplex& cx, int lo, int hi) {
  std::map<int, CohomologyDims> out;
  require_valid(cx);
  for (int m = lo; m <= hi; ++m) out[m] = cohomology_unchecked(cx, m);
  return out;
}

namespace {

std::map<int, long> h0_values(const FreeComplex& cx, int W, bool full) {
  std::map<int, long> d;
  if (full) {
    for (auto& [m, c] : scan_cohomology(cx, -W, W)) d[m] = c.h0;
    return d;
  }
  // Start in the middle and walk outward; stop at the first vanishing.
  const int start = std::clamp(0, -W, W);
  CohomologyDims c0 = cohomology_unchecked(cx, start);
  d[start] = c0.h0;
  bool h1_zero = c0.h1 == 0;
  for (int m = start + 1; m <= W; ++m) {
    if (h1_zero) {
      d[m] = cx.chi(m);
      continue;
    }
    CohomologyDims c = cohomology_unchecked(cx, m);
    d[m] = c.h0;
    h1_zero = c.h1 == 0;
  }
  bool h0_zero = c0.h0 == 0;
  for (int m = start - 1; m >= -W; --m) {
    if (h0_zero) {
      d[m] = 0;
      continue;
    }
    CohomologyDims c = cohomology_unchecked(cx, m);
    d[m] = c.h0;
    h0_zero = c.h0 == 0;
  }
  return d;
}

}  // namespace

SplittingType splitting_type(const FreeComplex& cx, SplittingOptions opts) {
  require_valid(cx);
  const int rk = cx.sheaf_rank(), deg = cx.sheaf_degree();
  int W = scan_window(cx);
  for (int attempt = 0; attempt < 2; ++attempt, W *= 2) {
    std::map<int, long> d = h0_values(cx, W, opts.full_scan);
    SplittingType t;
    if (recover_splitting(d, -W, W, rk, deg, t)) return t;
  }
  throw Error(ErrorCode::Internal, "splitting type reconstruction failed: h0 values inconsistent with rank " +
                                       std::to_string(rk) + " and degree " + std::to_string(deg));
}

}  // namespace vfc
