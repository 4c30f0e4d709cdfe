#include "picard/int_matrix.hpp"

#include "picard/errors.hpp"

#include <sstream>
#include <utility>

namespace picard {

std::string to_string(const Integer& value) { return value.str(); }

Integer parse_integer(const std::string& text) {
  std::size_t start = 0;
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) start = 1;
  if (start == text.size()) throw InputError("not an integer: '" + text + "'");
  for (std::size_t k = start; k < text.size(); ++k) {
    if (text[k] < '0' || text[k] > '9') throw InputError("not an integer: '" + text + "'");
  }
  return Integer(text[0] == '+' ? text.substr(1) : text);
}

Vector zero_vector(std::size_t n) { return Vector(n, Integer(0)); }

bool is_zero(const Vector& v) {
  for (const auto& x : v) {
    if (x != 0) return false;
  }
  return true;
}

Vector operator+(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw InputError("vector length mismatch");
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vector operator-(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw InputError("vector length mismatch");
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Vector operator-(const Vector& a) {
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

Vector operator*(const Integer& c, const Vector& v) {
  Vector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
  return r;
}

Vector concat(const Vector& a, const Vector& b) {
  Vector r = a;
  r.insert(r.end(), b.begin(), b.end());
  return r;
}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, Integer(0)) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  entries_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw InputError("ragged matrix literal");
    for (long long x : r) entries_.emplace_back(x);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::diagonal(const Vector& entries) {
  IntMatrix m(entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
  return m;
}

IntMatrix IntMatrix::from_columns(std::size_t rows, const std::vector<Vector>& columns) {
  IntMatrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) m.set_column(c, columns[c]);
  return m;
}

IntMatrix IntMatrix::column_vector(const Vector& v) {
  IntMatrix m(v.size(), 1);
  m.set_column(0, v);
  return m;
}

Vector IntMatrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Vector IntMatrix::row(std::size_t r) const {
  return Vector(entries_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                entries_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

void IntMatrix::set_column(std::size_t c, const Vector& v) {
  if (v.size() != rows_) throw InputError("column length mismatch");
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

IntMatrix IntMatrix::block(std::size_t row0, std::size_t col0, std::size_t nrows, std::size_t ncols) const {
  if (row0 + nrows > rows_ || col0 + ncols > cols_) throw InputError("block out of range");
  IntMatrix b(nrows, ncols);
  for (std::size_t r = 0; r < nrows; ++r)
    for (std::size_t c = 0; c < ncols; ++c) b(r, c) = (*this)(row0 + r, col0 + c);
  return b;
}

void IntMatrix::set_block(std::size_t row0, std::size_t col0, const IntMatrix& b) {
  if (row0 + b.rows() > rows_ || col0 + b.cols() > cols_) throw InputError("block out of range");
  for (std::size_t r = 0; r < b.rows(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c) (*this)(row0 + r, col0 + c) = b(r, c);
}

bool IntMatrix::is_zero() const {
  for (const auto& x : entries_) {
    if (x != 0) return false;
  }
  return true;
}

IntMatrix IntMatrix::operator-() const {
  IntMatrix n = *this;
  for (auto& x : n.entries_) x = -x;
  return n;
}

IntMatrix& IntMatrix::operator+=(const IntMatrix& b) {
  if (rows_ != b.rows_ || cols_ != b.cols_) throw InputError("matrix shape mismatch in +");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += b.entries_[k];
  return *this;
}

IntMatrix& IntMatrix::operator-=(const IntMatrix& b) {
  if (rows_ != b.rows_ || cols_ != b.cols_) throw InputError("matrix shape mismatch in -");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= b.entries_[k];
  return *this;
}

IntMatrix operator*(const Integer& c, const IntMatrix& a) {
  IntMatrix r = a;
  for (auto& x : r.entries_) x *= c;
  return r;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw InputError("matrix shape mismatch in *");
  IntMatrix p(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Integer& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Integer& bkj = b(k, j);
        if (bkj != 0) p(i, j) += aik * bkj;
      }
    }
  }
  return p;
}

Vector operator*(const IntMatrix& a, const Vector& v) {
  if (a.cols_ != v.size()) throw InputError("matrix-vector shape mismatch");
  Vector r(a.rows_, Integer(0));
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (v[k] != 0 && a(i, k) != 0) r[i] += a(i, k) * v[k];
    }
  }
  return r;
}

IntMatrix hcat(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows()) throw InputError("hcat row mismatch");
  IntMatrix r(a.rows(), a.cols() + b.cols());
  r.set_block(0, 0, a);
  r.set_block(0, a.cols(), b);
  return r;
}

IntMatrix vcat(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.cols()) throw InputError("vcat column mismatch");
  IntMatrix r(a.rows() + b.rows(), a.cols());
  r.set_block(0, 0, a);
  r.set_block(a.rows(), 0, b);
  return r;
}

IntMatrix direct_sum(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix r(a.rows() + b.rows(), a.cols() + b.cols());
  r.set_block(0, 0, a);
  r.set_block(a.rows(), a.cols(), b);
  return r;
}

IntMatrix repeat_diagonal(const IntMatrix& a, std::size_t copies) {
  IntMatrix r(a.rows() * copies, a.cols() * copies);
  for (std::size_t k = 0; k < copies; ++k) r.set_block(k * a.rows(), k * a.cols(), a);
  return r;
}

IntMatrix kron(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix r(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j) == 0) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) r(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    }
  return r;
}

Vector vec(const IntMatrix& x) {
  Vector v;
  v.reserve(x.rows() * x.cols());
  for (std::size_t c = 0; c < x.cols(); ++c)
    for (std::size_t r = 0; r < x.rows(); ++r) v.push_back(x(r, c));
  return v;
}

IntMatrix unvec(const Vector& v, std::size_t offset, std::size_t rows, std::size_t cols) {
  if (offset + rows * cols > v.size()) throw InputError("unvec out of range");
  IntMatrix x(rows, cols);
  for (std::size_t c = 0; c < cols; ++c)
    for (std::size_t r = 0; r < rows; ++r) x(r, c) = v[offset + c * rows + r];
  return x;
}

Integer determinant(const IntMatrix& a) {
  if (!a.is_square()) throw InputError("determinant of a non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  IntMatrix m = a;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && m(swap, k) == 0) ++swap;
      if (swap == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(m(k, c), m(swap, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

std::string to_string(const IntMatrix& a) {
  std::ostringstream out;
  out << "[";
  for (std::size_t r = 0; r < a.rows(); ++r) {
    out << (r ? "; " : "");
    for (std::size_t c = 0; c < a.cols(); ++c) out << (c ? " " : "") << a(r, c);
  }
  out << "]";
  return out.str();
}

}  // namespace picard
