#include "vfc/construct/profile.hpp"

#include "vfc/error.hpp"

namespace vfc {

DegreeProfile validate_profile(int n, std::vector<int> d, int d_b, std::uint32_t p) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "n must be at least 1");
  for (int di : d)
    if (di < 1) throw Error(ErrorCode::InvalidArgument, "every d_i must be at least 1");
  if (d_b < 0) throw Error(ErrorCode::InvalidArgument, "d_b must be non-negative");
  DegreeProfile pr;
  pr.n = n;
  pr.d = std::move(d);
  pr.d_b = d_b;
  pr.p = p;
  pr.m.push_back(0);
  for (int di : pr.d) pr.m.push_back(pr.m.back() + di);
  pr.e = pr.m.back() + d_b;
  pr.m.push_back(pr.e);
  if (pr.e > n)
    throw Error(ErrorCode::InvalidArgument, "e = " + std::to_string(pr.e) + " exceeds n = " + std::to_string(n));
  pr.tame = d_b == 0 || p == 0 || d_b % static_cast<int>(p) != 0;
  return pr;
}

namespace {

MultiForm monomial(Field f, int n, const std::vector<std::pair<int, int>>& powers) {
  Exponent e(n + 1, 0);
  int deg = 0;
  for (auto [var, k] : powers) {
    if (var > n)
      throw Error(ErrorCode::InvalidArgument, "the construction needs x_" + std::to_string(var) + " but n = " + std::to_string(n));
    e[var] += k;
    deg += k;
  }
  return MultiForm::from_terms(f, n, deg, {{e, f.one()}});
}

}  // namespace

LineInstance prop_line_instance(const DegreeProfile& pr, Field f) {
  const int n = pr.n;
  std::vector<MultiForm> F, G;
  for (int i = 1; i <= pr.l(); ++i) {
    const int di = pr.d[i - 1];
    MultiForm Fi = MultiForm::zero(f, n, di);
    for (int u = 0; u < di; ++u) Fi += monomial(f, n, {{pr.m[i - 1] + 2 + u, 1}, {0, di - 1 - u}, {1, u}});
    F.push_back(std::move(Fi));
  }
  if (pr.d_b >= 1) {
    MultiForm g = monomial(f, n, {{1, pr.d_b}});
    for (int u = 0; u + 2 <= pr.d_b; ++u) g += monomial(f, n, {{pr.m[pr.l()] + 2 + u, 1}, {1, pr.d_b - 2 - u}, {0, u + 1}});
    G.push_back(std::move(g));
  }
  std::vector<BinaryForm> comps(n + 1, BinaryForm(f));
  comps[0] = BinaryForm::s(f);
  comps[1] = BinaryForm::t(f);
  LineInstance inst{CIModel::make(f, n, std::move(F), std::move(G)), RationalCurveMap::make(f, n, std::move(comps)),
                    std::nullopt};
  if (pr.d_b >= 1) {
    std::vector<int> degs(n + 1 - pr.e, 1);
    degs.resize(static_cast<std::size_t>(n - pr.l()), 0);
    inst.expected = SplittingType::from(std::move(degs));
  }
  return inst;
}

RationalCurveMap cover_compose(const RationalCurveMap& phi, int m, const Point& sigma) {
  const Field f = phi.field();
  if (m < 1) throw Error(ErrorCode::InvalidArgument, "cover degree must be at least 1");
  if (!f.is_rational() && m % static_cast<int>(f.p()) == 0)
    throw Error(ErrorCode::WildCover, "characteristic " + std::to_string(f.p()) + " divides the cover degree " + std::to_string(m));
  if (sigma.field() != f) throw Error(ErrorCode::FieldMismatch, "ramification point over a different field");
  if (m == 1) return phi;
  // g sends (1:0) to sigma; the cover is g o (s^m, t^m) o g^-1.
  const Scalar g00 = sigma.s(), g10 = sigma.t();
  const Scalar g01 = sigma.s().is_zero() ? f.one() : f.zero();
  const Scalar g11 = sigma.s().is_zero() ? f.zero() : f.one();
  const BinaryForm s = BinaryForm::s(f), t = BinaryForm::t(f);
  const BinaryForm u = g11 * s - g01 * t;
  const BinaryForm v = g00 * t - g10 * s;
  const BinaryForm um = u.pow(m), vm = v.pow(m);
  const BinaryForm ps = g00 * um + g01 * vm;
  const BinaryForm pt = g10 * um + g11 * vm;
  std::vector<BinaryForm> comps;
  for (const auto& c : phi.components()) comps.push_back(c.is_zero() ? c : compose(c, ps, pt));
  return RationalCurveMap::make(f, phi.n(), std::move(comps));
}

}  // namespace vfc
