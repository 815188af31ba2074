#include "vfc/algebra/curve_map.hpp"

#include "vfc/error.hpp"

namespace vfc {

RationalCurveMap RationalCurveMap::make(Field f, int n, std::vector<BinaryForm> components) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "curve target must be P^n with n >= 1");
  if (static_cast<int>(components.size()) != n + 1)
    throw Error(ErrorCode::DimensionMismatch, "curve needs n+1 = " + std::to_string(n + 1) + " components");
  int d = -1;
  for (const auto& c : components) {
    if (c.field() != f) throw Error(ErrorCode::FieldMismatch, "curve component over a different field");
    if (c.is_zero()) continue;
    if (d >= 0 && c.degree() != d)
      throw Error(ErrorCode::InvalidArgument, "curve components have different degrees");
    d = c.degree();
  }
  if (d < 0) throw Error(ErrorCode::InvalidArgument, "all curve components vanish");
  if (d < 1) throw Error(ErrorCode::InvalidArgument, "curve degree must be at least 1");
  BinaryForm g(f);
  for (const auto& c : components) {
    g = gcd(g, c);
    if (g.degree() == 0) break;
  }
  if (g.degree() > 0)
    throw Error(ErrorCode::InvalidArgument, "curve components share the factor " + g.to_string());
  RationalCurveMap m;
  m.field_ = f;
  m.n_ = n;
  m.degree_ = d;
  m.components_ = std::move(components);
  return m;
}

RationalCurveMap RationalCurveMap::line(Field f, const std::vector<Scalar>& p, const std::vector<Scalar>& q) {
  if (p.size() != q.size()) throw Error(ErrorCode::DimensionMismatch, "line endpoints of different length");
  std::vector<BinaryForm> comps;
  comps.reserve(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) comps.push_back(BinaryForm::from_coeffs(f, {p[i], q[i]}));
  return make(f, static_cast<int>(p.size()) - 1, std::move(comps));
}

}  // namespace vfc
