#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace picard {

using Integer = boost::multiprecision::cpp_int;
using Vector = std::vector<Integer>;

std::string to_string(const Integer& value);
Integer parse_integer(const std::string& text);

Vector zero_vector(std::size_t n);
bool is_zero(const Vector& v);
Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator-(const Vector& a);
Vector operator*(const Integer& c, const Vector& v);
Vector concat(const Vector& a, const Vector& b);

/// Dense integer matrix, row-major, exact arithmetic.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix diagonal(const Vector& entries);
  static IntMatrix from_columns(std::size_t rows, const std::vector<Vector>& columns);
  static IntMatrix column_vector(const Vector& v);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Integer& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  Vector column(std::size_t c) const;
  Vector row(std::size_t r) const;
  void set_column(std::size_t c, const Vector& v);

  IntMatrix transpose() const;
  IntMatrix block(std::size_t row0, std::size_t col0, std::size_t nrows, std::size_t ncols) const;
  IntMatrix select_columns(std::size_t first, std::size_t count) const { return block(0, first, rows_, count); }
  IntMatrix select_rows(std::size_t first, std::size_t count) const { return block(first, 0, count, cols_); }
  void set_block(std::size_t row0, std::size_t col0, const IntMatrix& b);

  bool is_zero() const;
  bool is_square() const { return rows_ == cols_; }

  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

  IntMatrix operator-() const;
  IntMatrix& operator+=(const IntMatrix& b);
  IntMatrix& operator-=(const IntMatrix& b);
  friend IntMatrix operator+(IntMatrix a, const IntMatrix& b) { return a += b; }
  friend IntMatrix operator-(IntMatrix a, const IntMatrix& b) { return a -= b; }
  friend IntMatrix operator*(const Integer& c, const IntMatrix& a);
  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend Vector operator*(const IntMatrix& a, const Vector& v);

  const std::vector<Integer>& entries() const { return entries_; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> entries_;
};

/// [a | b]; row counts must agree.
IntMatrix hcat(const IntMatrix& a, const IntMatrix& b);
/// [a ; b]; column counts must agree.
IntMatrix vcat(const IntMatrix& a, const IntMatrix& b);
IntMatrix direct_sum(const IntMatrix& a, const IntMatrix& b);
/// Block diagonal with `copies` copies of a.
IntMatrix repeat_diagonal(const IntMatrix& a, std::size_t copies);
/// Kronecker product; used for vec(A X B) = (B^T kron A) vec(X) with column-major vec.
IntMatrix kron(const IntMatrix& a, const IntMatrix& b);

/// Column-major flattening, so that column c of x occupies entries [c*rows, (c+1)*rows).
Vector vec(const IntMatrix& x);
IntMatrix unvec(const Vector& v, std::size_t offset, std::size_t rows, std::size_t cols);

/// Exact determinant by fraction-free (Bareiss) elimination.
Integer determinant(const IntMatrix& a);

std::string to_string(const IntMatrix& a);

}  // namespace picard
