#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "vfc/construct/profile.hpp"

namespace vfc {

/// Deterministic bounded draws from mt19937_64 (the standard distributions
/// are not reproducible across library implementations).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  /// Uniform in [0, n), n >= 1.
  std::uint64_t below(std::uint64_t n);
  /// Uniform in [lo, hi].
  std::int64_t range(std::int64_t lo, std::int64_t hi) { return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1)); }
  /// Uniform element of F_p; over Q an integer in [-kRationalSpan, kRationalSpan].
  Scalar scalar(Field f);
  Scalar nonzero_scalar(Field f);
  Point point(Field f);

  static constexpr std::int64_t kRationalSpan = 9;

 private:
  std::mt19937_64 eng_;
};

/// Every monomial of degree `deg` in x_0..x_n, in lexicographic order.
std::vector<Exponent> monomials(int n, int deg);

/// Random coefficients for all monomials (optionally skipping those in x_0, x_1
/// only, so the form vanishes on the line {x_2 = ... = x_n = 0}).
MultiForm random_form(Rng& rng, Field f, int n, int deg, bool vanish_on_line = false);

/// F_i of degrees d_i and (when d_b >= 1) one boundary G of degree d_b.
CIModel random_model(const DegreeProfile& profile, Field f, std::uint64_t seed);

/// A random model containing the line (s, t, 0, ..., 0), certified log smooth
/// along it. The first `containing` boundaries also contain the line.
struct LineModelSpec {
  int n = 0;
  std::vector<int> d;
  std::vector<int> boundary_degrees;
  int containing = 0;
};

struct CertifiedLine {
  CIModel model;
  RationalCurveMap line;
  int attempts = 0;
};

/// Resamples (up to max_attempts) until the pair is log smooth along the
/// line and no extra boundary contains it; throws Precondition otherwise.
CertifiedLine random_line_model(const LineModelSpec& spec, Field f, std::uint64_t seed, int max_attempts = 200);

/// The line (s, t, 0, ..., 0).
RationalCurveMap standard_line(Field f, int n);

}  // namespace vfc
