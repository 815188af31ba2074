#include "vfc/construct/enumerate.hpp"

#include "vfc/error.hpp"

namespace vfc {

namespace {

// Calls fn(row0, row1) for every 2 x (n+1) RREF matrix of rank 2 over F_p.
template <class Fn>
void for_each_rref(Field f, int n, Fn&& fn) {
  const int N = n + 1;
  const std::uint32_t p = f.p();
  for (int i = 0; i < N; ++i)
    for (int j = i + 1; j < N; ++j) {
      // Free entries: row 0 at columns > i other than j, row 1 at columns > j.
      std::vector<int> free0, free1;
      for (int c = i + 1; c < N; ++c)
        if (c != j) free0.push_back(c);
      for (int c = j + 1; c < N; ++c) free1.push_back(c);
      const std::size_t nf = free0.size() + free1.size();
      std::vector<std::uint32_t> digits(nf, 0);
      for (;;) {
        std::vector<Scalar> r0(N, f.zero()), r1(N, f.zero());
        r0[i] = f.one();
        r1[j] = f.one();
        for (std::size_t a = 0; a < free0.size(); ++a) r0[free0[a]] = f.from_int(digits[a]);
        for (std::size_t b = 0; b < free1.size(); ++b) r1[free1[b]] = f.from_int(digits[free0.size() + b]);
        if (!fn(r0, r1)) return;
        std::size_t k = 0;
        while (k < nf && ++digits[k] == p) digits[k++] = 0;
        if (k == nf) break;
      }
    }
}

}  // namespace

std::vector<RationalCurveMap> all_lines(Field f, int n) {
  if (f.is_rational()) throw Error(ErrorCode::Precondition, "line enumeration needs a finite field");
  std::vector<RationalCurveMap> out;
  for_each_rref(f, n, [&](const std::vector<Scalar>& a, const std::vector<Scalar>& b) {
    out.push_back(RationalCurveMap::line(f, a, b));
    return true;
  });
  return out;
}

std::vector<FoundLine> enumerate_lines(const CIModel& x, std::size_t max_count) {
  if (x.field.is_rational()) throw Error(ErrorCode::Precondition, "line enumeration needs a finite field");
  std::vector<FoundLine> out;
  if (max_count == 0) return out;
  bool stop = false;
  for_each_rref(x.field, x.n, [&](const std::vector<Scalar>& a, const std::vector<Scalar>& b) {
    RationalCurveMap line = RationalCurveMap::line(x.field, a, b);
    if (lies_on(line, x)) {
      out.push_back({line, freeness_verdict(x, line)});
      if (out.size() >= max_count) stop = true;
    }
    return !stop;
  });
  return out;
}

}  // namespace vfc
