#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace ksix {

using Integer = mpz_class;
using IntVector = std::vector<Integer>;

/// Dense row-major matrix of arbitrary-precision integers.
///
/// Zero-sized shapes are legal and common: a homomorphism out of the trivial
/// group is an h x 0 matrix, and the relation matrix of a free group has no
/// columns.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix zero(std::size_t rows, std::size_t cols) { return IntMatrix(rows, cols); }
  static IntMatrix diagonal(std::span<const Integer> entries);
  static IntMatrix from_rows(const std::vector<IntVector>& rows, std::size_t cols);
  static IntMatrix from_columns(const std::vector<IntVector>& columns, std::size_t rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntVector row(std::size_t r) const;
  IntVector column(std::size_t c) const;
  void set_column(std::size_t c, const IntVector& v);

  IntMatrix transpose() const;
  IntMatrix select_rows(std::span<const std::size_t> idx) const;
  IntMatrix select_columns(std::span<const std::size_t> idx) const;
  IntMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  bool is_zero() const;

  // Elementary operations, used by the normal-form routines.
  void swap_rows(std::size_t a, std::size_t b);
  void swap_columns(std::size_t a, std::size_t b);
  void add_row_multiple(std::size_t target, std::size_t source, const Integer& k);
  void add_column_multiple(std::size_t target, std::size_t source, const Integer& k);
  void negate_row(std::size_t r);
  void negate_column(std::size_t c);

  IntMatrix operator-() const;
  IntMatrix& operator+=(const IntMatrix& o);
  IntMatrix& operator-=(const IntMatrix& o);
  friend IntMatrix operator+(IntMatrix a, const IntMatrix& b) { return a += b; }
  friend IntMatrix operator-(IntMatrix a, const IntMatrix& b) { return a -= b; }
  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator*(const Integer& k, IntMatrix a);
  friend IntVector operator*(const IntMatrix& a, const IntVector& v);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b);

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

/// [a | b]; both must have the same number of rows.
IntMatrix hstack(const IntMatrix& a, const IntMatrix& b);
/// [a ; b]; both must have the same number of columns.
IntMatrix vstack(const IntMatrix& a, const IntMatrix& b);
/// diag(a, b) with zero off-diagonal blocks.
IntMatrix block_diagonal(const IntMatrix& a, const IntMatrix& b);

/// Exact determinant by fraction-free (Bareiss) elimination.
Integer determinant(const IntMatrix& m);

bool is_zero(const IntVector& v);

}  // namespace ksix
