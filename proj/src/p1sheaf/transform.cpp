#include "vfc/p1sheaf/transform.hpp"

#include <algorithm>
#include <numeric>

#include "vfc/error.hpp"

namespace vfc {

BinaryForm unit_form_at(const Point& pt) {
  return pt.s().is_zero() ? BinaryForm::t(pt.field()) : BinaryForm::s(pt.field());
}

Matrix evaluation_matrix(const FreeSum& e, int m, const Point& pt) {
  const Field f = pt.field();
  Matrix ev(f, static_cast<std::size_t>(e.rank()), static_cast<std::size_t>(e.h0(m)));
  std::size_t col = 0;
  for (int i = 0; i < e.rank(); ++i) {
    const int a = e.twists[i] + m;
    for (int u = 0; u <= a; ++u, ++col) ev.set(i, col, pt.s().pow(a - u) * pt.t().pow(u));
  }
  return ev;
}

ElementaryTransform elementary_transform(const FreeSum& e, const SkyscraperConstraint& c) {
  const Field f = c.point.field();
  const int r = e.rank(), q = c.q();
  if (c.functional.field() != f) throw Error(ErrorCode::FieldMismatch, "constraint functional over a different field");
  if (q > 0 && static_cast<int>(c.functional.cols()) != r)
    throw Error(ErrorCode::DimensionMismatch, "functional has " + std::to_string(c.functional.cols()) +
                                                  " columns, bundle has rank " + std::to_string(r));
  if (q > r) throw Error(ErrorCode::InvalidArgument, "more conditions than the rank");

  // Order summands by decreasing twist so every correction term below has
  // nonnegative degree.
  std::vector<int> order(r);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return e.twists[x] > e.twists[y]; });

  Matrix red(f, static_cast<std::size_t>(q), static_cast<std::size_t>(r));
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < r; ++j) red.set(i, j, c.functional.get(i, order[j]));
  std::vector<std::size_t> piv = reduce_row_echelon(red);
  if (static_cast<int>(piv.size()) != q) throw Error(ErrorCode::InvalidArgument, "constraint functional is rank deficient");

  std::vector<int> piv_row(r, -1);
  for (int i = 0; i < q; ++i) piv_row[piv[i]] = i;

  ElementaryTransform out{e, c, {}, {}, {}, {}, {}};
  const BinaryForm ell = BinaryForm::vanishing_at(c.point);
  const BinaryForm h = unit_form_at(c.point);
  std::vector<std::vector<BinaryForm>> cols;  // columns in sorted order
  for (int j = 0; j < r; ++j) {
    std::vector<BinaryForm> col(r, BinaryForm(f));
    const int src = order[j];
    out.source_coord.push_back(src);
    out.lowered.push_back(piv_row[j] >= 0);
    if (piv_row[j] >= 0) {
      out.transform.twists.push_back(e.twists[src] - 1);
      col[src] = ell;
    } else {
      out.transform.twists.push_back(e.twists[src]);
      col[src] = BinaryForm::constant(f.one());
      for (int i = 0; i < q; ++i) {
        const Scalar coef = red.get(i, j);
        if (coef.is_zero()) continue;
        const int tgt = order[piv[i]];
        col[tgt] = -coef * h.pow(e.twists[tgt] - e.twists[src]);
      }
    }
    cols.push_back(std::move(col));
  }
  std::vector<std::vector<BinaryForm>> rows(r, std::vector<BinaryForm>(r, BinaryForm(f)));
  for (int j = 0; j < r; ++j)
    for (int i = 0; i < r; ++i) rows[i][j] = cols[j][i];
  out.inclusion = SheafMap::make(f, out.transform, e, std::move(rows));
  out.type = SplittingType::from(out.transform.twists);
  return out;
}

CohomologyDims ElementaryTransform::cohomology(int m) const {
  const int q = constraint.q();
  long rk = 0;
  if (q > 0 && ambient.h0(m) > 0) rk = static_cast<long>(rank(constraint.functional * evaluation_matrix(ambient, m, constraint.point)));
  return {ambient.h0(m) - rk, ambient.h1(m) + q - rk};
}

}  // namespace vfc
