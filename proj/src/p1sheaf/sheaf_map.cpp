#include "vfc/p1sheaf/sheaf_map.hpp"

#include "vfc/error.hpp"

namespace vfc {

SheafMap SheafMap::zero(Field f, FreeSum source, FreeSum target) {
  SheafMap m;
  m.field_ = f;
  m.entries_.assign(static_cast<std::size_t>(source.rank()) * target.rank(), BinaryForm(f));
  m.source_ = std::move(source);
  m.target_ = std::move(target);
  return m;
}

SheafMap SheafMap::make(Field f, FreeSum source, FreeSum target, std::vector<std::vector<BinaryForm>> rows) {
  if (static_cast<int>(rows.size()) != target.rank())
    throw Error(ErrorCode::DimensionMismatch, "sheaf map needs one row per target summand");
  SheafMap m = zero(f, std::move(source), std::move(target));
  for (int j = 0; j < m.target_.rank(); ++j) {
    if (static_cast<int>(rows[j].size()) != m.source_.rank())
      throw Error(ErrorCode::DimensionMismatch, "sheaf map needs one column per source summand");
    for (int i = 0; i < m.source_.rank(); ++i) m.set_entry(j, i, std::move(rows[j][i]));
  }
  return m;
}

void SheafMap::set_entry(int j, int i, BinaryForm f) {
  if (f.field() != field_) throw Error(ErrorCode::FieldMismatch, "sheaf map entry over a different field");
  const int want = target_.twists[j] - source_.twists[i];
  if (!f.is_zero() && f.degree() != want)
    throw Error(ErrorCode::InvalidArgument, "entry (" + std::to_string(j) + "," + std::to_string(i) + ") has degree " +
                                                std::to_string(f.degree()) + ", expected " + std::to_string(want));
  entries_[static_cast<std::size_t>(j) * source_.rank() + i] = std::move(f);
}

bool SheafMap::is_zero() const {
  for (const auto& e : entries_)
    if (!e.is_zero()) return false;
  return true;
}

SheafMap compose(const SheafMap& outer, const SheafMap& inner) {
  if (outer.field_ != inner.field_) throw Error(ErrorCode::FieldMismatch, "composing maps over different fields");
  if (!(outer.source_ == inner.target_)) throw Error(ErrorCode::DimensionMismatch, "composing maps with mismatched bundles");
  SheafMap r = SheafMap::zero(outer.field_, inner.source_, outer.target_);
  for (int j = 0; j < outer.target_.rank(); ++j)
    for (int i = 0; i < inner.source_.rank(); ++i) {
      BinaryForm acc(outer.field_);
      for (int k = 0; k < inner.target_.rank(); ++k) acc += outer.entry(j, k) * inner.entry(k, i);
      r.set_entry(j, i, std::move(acc));
    }
  return r;
}

Matrix SheafMap::global_sections(int m) const {
  std::vector<long> col_off(source_.rank() + 1, 0), row_off(target_.rank() + 1, 0);
  for (int i = 0; i < source_.rank(); ++i) col_off[i + 1] = col_off[i] + std::max(0, source_.twists[i] + m + 1);
  for (int j = 0; j < target_.rank(); ++j) row_off[j + 1] = row_off[j] + std::max(0, target_.twists[j] + m + 1);
  Matrix mat(field_, static_cast<std::size_t>(row_off.back()), static_cast<std::size_t>(col_off.back()));
  for (int j = 0; j < target_.rank(); ++j)
    for (int i = 0; i < source_.rank(); ++i) {
      const BinaryForm& e = entry(j, i);
      if (e.is_zero()) continue;
      const int a = source_.twists[i] + m;
      for (int u = 0; u <= a; ++u)  // source monomial s^(a-u) t^u
        for (int w = 0; w <= e.degree(); ++w) {
          const Scalar& c = e.coeffs()[w];
          if (c.is_zero()) continue;
          mat.add_to(static_cast<std::size_t>(row_off[j] + u + w), static_cast<std::size_t>(col_off[i] + u), c);
        }
    }
  return mat;
}

Matrix SheafMap::at_point(const Point& pt) const {
  Matrix mat(field_, target_.rank(), source_.rank());
  for (int j = 0; j < target_.rank(); ++j)
    for (int i = 0; i < source_.rank(); ++i) mat.set(j, i, entry(j, i).evaluate(pt));
  return mat;
}

BinaryForm determinant(std::vector<std::vector<BinaryForm>> m, Field f) {
  const std::size_t n = m.size();
  if (n == 0) return BinaryForm::constant(f.one());
  BinaryForm prev = BinaryForm::constant(f.one());
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t piv = k;
    while (piv < n && m[piv][k].is_zero()) ++piv;
    if (piv == n) return BinaryForm(f);
    if (piv != k) {
      std::swap(m[piv], m[k]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        BinaryForm num = m[k][k] * m[i][j] - m[i][k] * m[k][j];
        auto q = divide_exact(num, prev);
        if (!q) throw Error(ErrorCode::Internal, "fraction-free elimination hit an inexact division");
        m[i][j] = std::move(*q);
      }
    prev = m[k][k];
  }
  BinaryForm d = m[n - 1][n - 1];
  return negate ? -d : d;
}

namespace {

bool next_combination(std::vector<int>& idx, int n) {
  const int k = static_cast<int>(idx.size());
  for (int i = k - 1; i >= 0; --i) {
    if (idx[i] < n - k + i) {
      ++idx[i];
      for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

BinaryForm maximal_minor_gcd(const SheafMap& m, bool stop_at_unit) {
  const Field f = m.field();
  const int rows = m.target().rank(), cols = m.source().rank();
  const bool choose_cols = rows <= cols;
  const int k = choose_cols ? rows : cols;
  const int n = choose_cols ? cols : rows;
  if (k == 0) return BinaryForm::constant(f.one());
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  BinaryForm g(f);
  do {
    std::vector<std::vector<BinaryForm>> sub(k, std::vector<BinaryForm>(k, BinaryForm(f)));
    for (int a = 0; a < k; ++a)
      for (int b = 0; b < k; ++b) sub[a][b] = choose_cols ? m.entry(a, idx[b]) : m.entry(idx[a], b);
    BinaryForm d = determinant(std::move(sub), f);
    if (d.is_zero()) continue;
    g = gcd(g, d);
    if (stop_at_unit && g.degree() == 0) break;
  } while (next_combination(idx, n));
  return g;
}

bool fiber_surjective(const SheafMap& m) {
  if (m.target().rank() > m.source().rank()) return false;
  BinaryForm g = maximal_minor_gcd(m, true);
  return !g.is_zero() && g.degree() == 0;
}

bool subbundle_inclusion(const SheafMap& m) {
  if (m.source().rank() > m.target().rank()) return false;
  BinaryForm g = maximal_minor_gcd(m, true);
  return !g.is_zero() && g.degree() == 0;
}

}  // namespace vfc
