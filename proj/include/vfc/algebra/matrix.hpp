#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "vfc/algebra/field.hpp"

namespace vfc {

/// Dense matrix over a Field. Prime-field entries live in a flat uint32 array
/// so elimination can run on the SIMD row kernels; rational entries use GMP.
class Matrix {
 public:
  Matrix() = default;
  Matrix(Field f, std::size_t rows, std::size_t cols);
  static Matrix identity(Field f, std::size_t n);
  static Matrix from_rows(Field f, const std::vector<std::vector<Scalar>>& rows);

  Field field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar get(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, const Scalar& v);
  void add_to(std::size_t r, std::size_t c, const Scalar& v);
  bool is_zero() const;

  Matrix transposed() const;
  /// Rows [r0, r0+nr) and columns [c0, c0+nc).
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  std::vector<Scalar> row(std::size_t r) const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b);

  std::string to_string() const;

  // Raw access for the elimination routines.
  std::uint32_t* residue_row(std::size_t r) { return residues_.data() + r * cols_; }
  const std::uint32_t* residue_row(std::size_t r) const { return residues_.data() + r * cols_; }
  mpq_class* rational_row(std::size_t r) { return rationals_.data() + r * cols_; }

 private:
  Field field_;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<std::uint32_t> residues_;
  std::vector<mpq_class> rationals_;
};

/// Reduced row echelon form, in place. Returns the pivot columns.
std::vector<std::size_t> reduce_row_echelon(Matrix& m);

/// Rank by forward elimination on a copy.
std::size_t rank(Matrix m);

/// Basis of {x : m x = 0}, one vector per free column.
std::vector<std::vector<Scalar>> null_space(const Matrix& m);

bool is_invertible(const Matrix& m);
Matrix inverse(const Matrix& m);

}  // namespace vfc
