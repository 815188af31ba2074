#include "vfc/p1sheaf/cech.hpp"

#include <algorithm>

#include "vfc/error.hpp"

namespace vfc {

namespace {

// Laurent monomials s^(a-u) t^u of O(a) on the charts of the standard cover,
// truncated at depth N: {s != 0} keeps u in [0, a+N], {t != 0} keeps
// u in [-N, a], the overlap keeps u in [-N, a+N]. Multiplication by forms of
// nonnegative degree preserves these ranges, and for N >= -a-1 each truncated
// column still computes H^*(O(a)).
enum Chart { kS = 0, kT = 1, kST = 2 };

struct Range {
  int lo, hi;
  int size() const { return std::max(0, hi - lo + 1); }
};

Range chart_range(Chart c, int a, int N) {
  switch (c) {
    case kS: return {0, a + N};
    case kT: return {-N, a};
    case kST: return {-N, a + N};
  }
  return {0, -1};
}

// Layout of C^j(term) for one term: j = 0 lists (chart s, chart t) per
// summand, j = 1 the overlap per summand.
struct TermLayout {
  std::vector<int> twists;
  int N = 0;
  std::vector<long> off0_s, off0_t, off1;
  long dim0 = 0, dim1 = 0;

  TermLayout(const FreeSum& sum, int m, int depth) : N(depth) {
    for (int a : sum.twists) twists.push_back(a + m);
    for (int a : twists) {
      off0_s.push_back(dim0);
      dim0 += chart_range(kS, a, N).size();
      off0_t.push_back(dim0);
      dim0 += chart_range(kT, a, N).size();
      off1.push_back(dim1);
      dim1 += chart_range(kST, a, N).size();
    }
  }
  long offset(Chart c, int idx) const { return c == kS ? off0_s[idx] : c == kT ? off0_t[idx] : off1[idx]; }
  long dim(int j) const { return j == 0 ? dim0 : dim1; }
};

}  // namespace

CohomologyDims cech_cohomology_full(const FreeComplex& cx, int m) {
  const Field f = cx.field();
  const int L = cx.length() - 1;
  int N = 0;
  for (const auto& t : cx.terms)
    for (int a : t.twists) N = std::max(N, -(a + m) - 1);

  std::vector<TermLayout> lay;
  for (const auto& t : cx.terms) lay.emplace_back(t, m, N);

  // Tot^k = sum over i + j = k of C^j(term i); blocks ordered by i.
  auto tot_offset = [&](int k, int i) {
    long off = 0;
    for (int i2 = 0; i2 < i; ++i2) {
      int j = k - i2;
      if (j == 0 || j == 1) off += lay[i2].dim(j);
    }
    return off;
  };
  auto tot_dim = [&](int k) {
    long d = 0;
    for (int i = 0; i <= L; ++i) {
      int j = k - i;
      if (j == 0 || j == 1) d += lay[i].dim(j);
    }
    return d;
  };

  std::vector<long> ranks(L + 2, 0);
  for (int k = 0; k <= L; ++k) {
    Matrix D(f, static_cast<std::size_t>(tot_dim(k + 1)), static_cast<std::size_t>(tot_dim(k)));
    for (int i = 0; i <= L; ++i) {
      const int j = k - i;
      if (j != 0 && j != 1) continue;
      const long col0 = tot_offset(k, i);
      // Horizontal part: term i -> term i+1, chartwise.
      if (i < L) {
        const SheafMap& mp = cx.maps[i];
        const long row0 = tot_offset(k + 1, i + 1);
        const std::vector<Chart> charts = j == 0 ? std::vector<Chart>{kS, kT} : std::vector<Chart>{kST};
        for (int tj = 0; tj < mp.target().rank(); ++tj)
          for (int si = 0; si < mp.source().rank(); ++si) {
            const BinaryForm& e = mp.entry(tj, si);
            if (e.is_zero()) continue;
            const int a = lay[i].twists[si];
            const int b = lay[i + 1].twists[tj];
            for (Chart c : charts) {
              const Range rs = chart_range(c, a, N), rt = chart_range(c, b, N);
              for (int u = rs.lo; u <= rs.hi; ++u)
                for (int w = 0; w <= e.degree(); ++w) {
                  const Scalar& cw = e.coeffs()[w];
                  if (cw.is_zero()) continue;
                  const long r = row0 + lay[i + 1].offset(c, tj) + (u + w - rt.lo);
                  const long cc = col0 + lay[i].offset(c, si) + (u - rs.lo);
                  D.add_to(static_cast<std::size_t>(r), static_cast<std::size_t>(cc), cw);
                }
            }
          }
      }
      // Cech part: (f_s, f_t) -> (-1)^i (f_t - f_s).
      if (j == 0) {
        const long row0 = tot_offset(k + 1, i);
        const Scalar plus = (i % 2 == 0) ? f.one() : -f.one();
        const Scalar minus = -plus;
        for (int idx = 0; idx < static_cast<int>(lay[i].twists.size()); ++idx) {
          const int a = lay[i].twists[idx];
          const Range rs = chart_range(kS, a, N), rt = chart_range(kT, a, N), ro = chart_range(kST, a, N);
          for (int u = rs.lo; u <= rs.hi; ++u)
            D.add_to(static_cast<std::size_t>(row0 + lay[i].offset(kST, idx) + (u - ro.lo)),
                     static_cast<std::size_t>(col0 + lay[i].offset(kS, idx) + (u - rs.lo)), minus);
          for (int u = rt.lo; u <= rt.hi; ++u)
            D.add_to(static_cast<std::size_t>(row0 + lay[i].offset(kST, idx) + (u - ro.lo)),
                     static_cast<std::size_t>(col0 + lay[i].offset(kT, idx) + (u - rt.lo)), plus);
        }
      }
    }
    ranks[k] = static_cast<long>(rank(std::move(D)));
  }

  auto hyper = [&](int k) -> long {
    if (k < 0 || k > L + 1) return 0;
    return tot_dim(k) - ranks[k] - (k > 0 ? ranks[k - 1] : 0);
  };
  return {hyper(cx.position), hyper(cx.position + 1)};
}

CohomologyDims cech_cohomology(const FreeComplex& cx, int m) {
  require_valid(cx);
  return cohomology_unchecked(cx, m);
}

CohomologyDims cohomology_unchecked(const FreeComplex& cx, int m) {
  if (cx.length() == 2) {
    // 0 -> K -> S -> T -> 0 is exact, so the long exact sequence in
    // cohomology determines both dimensions from the map on H^0.
    const SheafMap& b = cx.maps[0];
    const long rk = static_cast<long>(rank(b.global_sections(m)));
    const long h0 = b.source().h0(m) - rk;
    const long h1 = b.target().h0(m) - rk + b.source().h1(m) - b.target().h1(m);
    return {h0, h1};
  }
  return cech_cohomology_full(cx, m);
}

}  // namespace vfc
