#include "vfc/algebra/matrix.hpp"

#include <sstream>
#include <utility>

#include "vfc/error.hpp"
#include "vfc/kernels/modp.hpp"

namespace vfc {

Matrix::Matrix(Field f, std::size_t rows, std::size_t cols) : field_(f), rows_(rows), cols_(cols) {
  if (f.is_rational())
    rationals_.assign(rows * cols, mpq_class(0));
  else
    residues_.assign(rows * cols, 0u);
}

Matrix Matrix::identity(Field f, std::size_t n) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, f.one());
  return m;
}

Matrix Matrix::from_rows(Field f, const std::vector<std::vector<Scalar>>& rows) {
  const std::size_t nc = rows.empty() ? 0 : rows.front().size();
  Matrix m(f, rows.size(), nc);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != nc) throw Error(ErrorCode::DimensionMismatch, "ragged matrix rows");
    for (std::size_t c = 0; c < nc; ++c) m.set(r, c, rows[r][c]);
  }
  return m;
}

Scalar Matrix::get(std::size_t r, std::size_t c) const {
  if (field_.is_rational()) return Scalar(rationals_[r * cols_ + c]);
  return Scalar(Scalar::Residue{residues_[r * cols_ + c], field_.p()});
}

void Matrix::set(std::size_t r, std::size_t c, const Scalar& v) {
  if (v.field() != field_) throw Error(ErrorCode::FieldMismatch, "matrix entry from a different field");
  if (field_.is_rational())
    rationals_[r * cols_ + c] = v.rational();
  else
    residues_[r * cols_ + c] = v.residue();
}

void Matrix::add_to(std::size_t r, std::size_t c, const Scalar& v) {
  if (v.field() != field_) throw Error(ErrorCode::FieldMismatch, "matrix entry from a different field");
  if (field_.is_rational()) {
    rationals_[r * cols_ + c] += v.rational();
  } else {
    std::uint64_t s = std::uint64_t{residues_[r * cols_ + c]} + v.residue();
    residues_[r * cols_ + c] = static_cast<std::uint32_t>(s % field_.p());
  }
}

bool Matrix::is_zero() const {
  for (auto x : residues_)
    if (x) return false;
  for (const auto& q : rationals_)
    if (sgn(q) != 0) return false;
  return true;
}

Matrix Matrix::transposed() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) {
      if (field_.is_rational())
        t.rationals_[c * rows_ + r] = rationals_[r * cols_ + c];
      else
        t.residues_[c * rows_ + r] = residues_[r * cols_ + c];
    }
  return t;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw Error(ErrorCode::DimensionMismatch, "block out of range");
  Matrix b(field_, nr, nc);
  for (std::size_t r = 0; r < nr; ++r)
    for (std::size_t c = 0; c < nc; ++c) b.set(r, c, get(r0 + r, c0 + c));
  return b;
}

std::vector<Scalar> Matrix::row(std::size_t r) const {
  std::vector<Scalar> v;
  v.reserve(cols_);
  for (std::size_t c = 0; c < cols_; ++c) v.push_back(get(r, c));
  return v;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.field_ != b.field_) throw Error(ErrorCode::FieldMismatch, "matrix product over different fields");
  if (a.cols_ != b.rows_) throw Error(ErrorCode::DimensionMismatch, "matrix product shape mismatch");
  Matrix m(a.field_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      Scalar x = a.get(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) m.add_to(i, j, x * b.get(k, j));
    }
  return m;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.residues_ == b.residues_ &&
         a.rationals_ == b.rationals_;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t r = 0; r < rows_; ++r) {
    os << (r ? "; " : "");
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? " " : "") << get(r, c).to_string();
  }
  os << "]";
  return os.str();
}

namespace {

// Gaussian elimination over F_p on the flat residue array. When `full` is
// set the result is reduced row echelon form; otherwise only rows below each
// pivot are cleared (enough for rank).
std::vector<std::size_t> eliminate_modp(Matrix& m, bool full) {
  const std::uint32_t p = m.field().p();
  const auto& k = kernels::active();
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::size_t> pivots;
  std::vector<std::uint32_t> tmp(cols);
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m.residue_row(piv)[c] == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r) {
      std::uint32_t* a = m.residue_row(piv);
      std::uint32_t* b = m.residue_row(r);
      std::copy(a + c, a + cols, tmp.begin());
      std::copy(b + c, b + cols, a + c);
      std::copy(tmp.begin(), tmp.begin() + (cols - c), b + c);
    }
    std::uint32_t* prow = m.residue_row(r);
    k.scale(prow + c, inverse_mod(prow[c], p), p, cols - c);
    for (std::size_t i = full ? 0 : r + 1; i < rows; ++i) {
      if (i == r) continue;
      std::uint32_t* row = m.residue_row(i);
      const std::uint32_t x = row[c];
      if (x == 0) continue;
      k.axpy(row + c, prow + c, p - x, p, cols - c);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::vector<std::size_t> eliminate_rational(Matrix& m, bool full) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  mpq_class factor;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && sgn(m.rational_row(piv)[c]) == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r)
      for (std::size_t j = c; j < cols; ++j) std::swap(m.rational_row(piv)[j], m.rational_row(r)[j]);
    mpq_class* prow = m.rational_row(r);
    mpq_class inv = 1 / prow[c];
    for (std::size_t j = c; j < cols; ++j) prow[j] *= inv;
    for (std::size_t i = full ? 0 : r + 1; i < rows; ++i) {
      if (i == r) continue;
      mpq_class* row = m.rational_row(i);
      if (sgn(row[c]) == 0) continue;
      factor = row[c];
      for (std::size_t j = c; j < cols; ++j)
        if (sgn(prow[j]) != 0) row[j] -= factor * prow[j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

// Rank over Q. Rows are cleared of denominators; if the result has full
// rank mod a large prime the rational rank is full too (it can only be
// larger), otherwise eliminate over Q.
std::size_t rank_rational(Matrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  const Field fp = Field::characteristic(Field::kMaxPrime);
  Matrix red(fp, rows, cols);
  mpz_class den, x;
  for (std::size_t r = 0; r < rows; ++r) {
    const mpq_class* row = m.rational_row(r);
    den = 1;
    for (std::size_t c = 0; c < cols; ++c) den = lcm(den, row[c].get_den());
    for (std::size_t c = 0; c < cols; ++c) {
      x = row[c].get_num() * (den / row[c].get_den());
      x %= Field::kMaxPrime;
      if (x < 0) x += Field::kMaxPrime;
      red.residue_row(r)[c] = static_cast<std::uint32_t>(x.get_ui());
    }
  }
  if (eliminate_modp(red, false).size() == std::min(rows, cols)) return std::min(rows, cols);
  return eliminate_rational(m, false).size();
}

std::vector<std::size_t> eliminate(Matrix& m, bool full) {
  return m.field().is_rational() ? eliminate_rational(m, full) : eliminate_modp(m, full);
}

}  // namespace

std::vector<std::size_t> reduce_row_echelon(Matrix& m) { return eliminate(m, true); }

std::size_t rank(Matrix m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  if (m.rows() > m.cols()) m = m.transposed();
  if (m.field().is_rational()) return rank_rational(m);
  return eliminate(m, false).size();
}

std::vector<std::vector<Scalar>> null_space(const Matrix& m) {
  Matrix r = m;
  auto pivots = reduce_row_echelon(r);
  const Field f = m.field();
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<Scalar>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Scalar> v(m.cols(), f.zero());
    v[free] = f.one();
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r.get(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

bool is_invertible(const Matrix& m) { return m.rows() == m.cols() && rank(m) == m.rows(); }

Matrix inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::DimensionMismatch, "inverse of a non-square matrix");
  const std::size_t n = m.rows();
  Matrix aug(m.field(), n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.set(i, j, m.get(i, j));
    aug.set(i, n + i, m.field().one());
  }
  auto pivots = reduce_row_echelon(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1)
    throw Error(ErrorCode::InvalidArgument, "matrix is singular");
  return aug.block(0, n, n, n);
}

}  // namespace vfc
