#include "vfc/construct/random.hpp"

#include <limits>

#include "vfc/error.hpp"

namespace vfc {

std::uint64_t Rng::below(std::uint64_t n) {
  if (n <= 1) return 0;
  // Rejection sampling on the top of the range keeps draws unbiased.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % n;
  std::uint64_t x;
  do {
    x = eng_();
  } while (x >= limit);
  return x % n;
}

Scalar Rng::scalar(Field f) {
  if (f.is_rational()) return f.from_int(range(-kRationalSpan, kRationalSpan));
  return f.from_int(static_cast<std::int64_t>(below(f.p())));
}

Scalar Rng::nonzero_scalar(Field f) {
  if (f.is_rational()) {
    std::int64_t v = range(1, 2 * kRationalSpan);
    return f.from_int(v > kRationalSpan ? kRationalSpan - v : v);
  }
  return f.from_int(static_cast<std::int64_t>(1 + below(f.p() - 1)));
}

Point Rng::point(Field f) {
  // (0:1) or (1:c) with c uniform; over Q, c from the integer span.
  if (!f.is_rational()) {
    const std::uint64_t k = below(static_cast<std::uint64_t>(f.p()) + 1);
    if (k == f.p()) return Point::zero_of_s(f);
    return Point::make(f.one(), f.from_int(static_cast<std::int64_t>(k)));
  }
  const std::int64_t k = range(-kRationalSpan, kRationalSpan + 1);
  if (k > kRationalSpan) return Point::zero_of_s(f);
  return Point::make(f.one(), f.from_int(k));
}

std::vector<Exponent> monomials(int n, int deg) {
  std::vector<Exponent> out;
  Exponent e(n + 1, 0);
  auto rec = [&](auto&& self, int i, int left) -> void {
    if (i == n) {
      e[i] = left;
      out.push_back(e);
      return;
    }
    for (int k = left; k >= 0; --k) {
      e[i] = k;
      self(self, i + 1, left - k);
    }
  };
  rec(rec, 0, deg);
  return out;
}

MultiForm random_form(Rng& rng, Field f, int n, int deg, bool vanish_on_line) {
  std::map<Exponent, Scalar> terms;
  for (const auto& e : monomials(n, deg)) {
    if (vanish_on_line && e[0] + e[1] == deg) continue;
    terms.emplace(e, rng.scalar(f));
  }
  return MultiForm::from_terms(f, n, deg, terms);
}

namespace {

// Redraw forms that came out identically zero (only likely over tiny fields).
MultiForm nonzero_form(Rng& rng, Field f, int n, int deg, bool vanish_on_line) {
  for (;;) {
    MultiForm g = random_form(rng, f, n, deg, vanish_on_line);
    if (!g.is_zero()) return g;
  }
}

}  // namespace

CIModel random_model(const DegreeProfile& pr, Field f, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<MultiForm> F, G;
  for (int di : pr.d) F.push_back(nonzero_form(rng, f, pr.n, di, false));
  if (pr.d_b >= 1) G.push_back(nonzero_form(rng, f, pr.n, pr.d_b, false));
  return CIModel::make(f, pr.n, std::move(F), std::move(G));
}

RationalCurveMap standard_line(Field f, int n) {
  std::vector<BinaryForm> comps(n + 1, BinaryForm(f));
  comps[0] = BinaryForm::s(f);
  comps[1] = BinaryForm::t(f);
  return RationalCurveMap::make(f, n, std::move(comps));
}

CertifiedLine random_line_model(const LineModelSpec& spec, Field f, std::uint64_t seed, int max_attempts) {
  if (spec.containing < 0 || spec.containing > static_cast<int>(spec.boundary_degrees.size()))
    throw Error(ErrorCode::InvalidArgument, "more containing boundaries than boundaries");
  Rng rng(seed);
  const RationalCurveMap line = standard_line(f, spec.n);
  for (int attempt = 1; attempt <= max_attempts; ++attempt) {
    std::vector<MultiForm> F, G;
    for (int di : spec.d) F.push_back(nonzero_form(rng, f, spec.n, di, true));
    for (std::size_t j = 0; j < spec.boundary_degrees.size(); ++j)
      G.push_back(nonzero_form(rng, f, spec.n, spec.boundary_degrees[j], static_cast<int>(j) < spec.containing));
    CIModel x = CIModel::make(f, spec.n, std::move(F), std::move(G));
    bool extra_contains = false;
    for (int j = spec.containing; j < x.k(); ++j)
      if (x.boundaries[j].substitute(line).is_zero()) extra_contains = true;
    if (extra_contains || !log_smooth_along(line, x)) continue;
    return CertifiedLine{std::move(x), line, attempt};
  }
  throw Error(ErrorCode::Precondition, "no log smooth sample within " + std::to_string(max_attempts) + " attempts");
}

}  // namespace vfc
