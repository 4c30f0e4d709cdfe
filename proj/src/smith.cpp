#include "picard/smith.hpp"

#include "picard/errors.hpp"

#include <climits>
#include <utility>

namespace picard {

namespace {

struct Overflow {};

template <class T>
struct Arith;

// int64 with every operation checked; an overflow abandons the fast path.
template <>
struct Arith<long long> {
  static long long submul(long long a, long long q, long long b) {
    long long p;
    long long r;
    if (__builtin_mul_overflow(q, b, &p) || __builtin_sub_overflow(a, p, &r)) throw Overflow{};
    return r;
  }
  static long long neg(long long a) {
    if (a == LLONG_MIN) throw Overflow{};
    return -a;
  }
  static long long abs(long long a) { return a < 0 ? neg(a) : a; }
  static long long from(const Integer& x) { return x.convert_to<long long>(); }
  static Integer to(long long x) { return Integer(x); }
};

template <>
struct Arith<Integer> {
  static Integer submul(const Integer& a, const Integer& q, const Integer& b) { return a - q * b; }
  static Integer neg(const Integer& a) { return -a; }
  static Integer abs(const Integer& a) { return a < 0 ? Integer(-a) : a; }
  static Integer from(const Integer& x) { return x; }
  static Integer to(const Integer& x) { return x; }
};

template <class T>
struct Dense {
  std::size_t m = 0;
  std::size_t n = 0;
  std::vector<T> d;

  Dense() = default;
  Dense(std::size_t rows, std::size_t cols) : m(rows), n(cols), d(rows * cols, T(0)) {}

  static Dense identity(std::size_t k) {
    Dense e(k, k);
    for (std::size_t i = 0; i < k; ++i) e(i, i) = T(1);
    return e;
  }
  T& operator()(std::size_t i, std::size_t j) { return d[i * n + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return d[i * n + j]; }

  IntMatrix to_matrix() const {
    IntMatrix out(m, n);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < n; ++j) out(i, j) = Arith<T>::to((*this)(i, j));
    return out;
  }
};

// Quotient of a by b rounded to the nearest integer, so |a - q b| <= |b| / 2.
template <class T>
T nearest_quotient(const T& a, const T& b) {
  using A = Arith<T>;
  T q = a / b;
  T r = A::submul(a, q, b);
  if (r != 0) {
    T ar = A::abs(r);
    T ab = A::abs(b);
    if (ar > ab - ar) {
      bool same_sign = (r > 0) == (b > 0);
      q = same_sign ? T(q + 1) : T(q - 1);
    }
  }
  return q;
}

template <class T>
class Eliminator {
 public:
  Eliminator(const IntMatrix& a, detail::SmithRequest request) : request_(request) {
    a_ = Dense<T>(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t j = 0; j < a.cols(); ++j) a_(i, j) = Arith<T>::from(a(i, j));
    if (request_.u) u_ = Dense<T>::identity(a.rows());
    if (request_.u_inv) u_inv_ = Dense<T>::identity(a.rows());
    if (request_.v) v_ = Dense<T>::identity(a.cols());
    if (request_.v_inv) v_inv_ = Dense<T>::identity(a.cols());
  }

  detail::SmithTransforms run() {
    const std::size_t m = a_.m;
    const std::size_t n = a_.n;
    std::size_t t = 0;
    while (t < m && t < n) {
      if (!bring_min_to(t, t, m, t, n)) break;
      reduce_pivot(t);
      if (a_(t, t) < 0) negate_row(t);
      ++t;
    }
    detail::SmithTransforms out;
    for (std::size_t k = 0; k < t; ++k) out.diagonal.push_back(Arith<T>::to(a_(k, k)));
    if (request_.u) out.u = u_.to_matrix();
    if (request_.u_inv) out.u_inv = u_inv_.to_matrix();
    if (request_.v) out.v = v_.to_matrix();
    if (request_.v_inv) out.v_inv = v_inv_.to_matrix();
    return out;
  }

 private:
  using A = Arith<T>;

  // Moves the smallest nonzero entry of rows [r0,r1) x cols [c0,c1) to (r0, c0).
  bool bring_min_to(std::size_t t, std::size_t r0, std::size_t r1, std::size_t c0, std::size_t c1) {
    bool found = false;
    std::size_t bi = 0;
    std::size_t bj = 0;
    T best = 0;
    for (std::size_t i = r0; i < r1; ++i) {
      for (std::size_t j = c0; j < c1; ++j) {
        const T& x = a_(i, j);
        if (x == 0) continue;
        T ax = A::abs(x);
        if (!found || ax < best) {
          found = true;
          best = ax;
          bi = i;
          bj = j;
          if (best == 1) break;
        }
      }
      if (found && best == 1) break;
    }
    if (!found) return false;
    if (bi != t) swap_rows(bi, t);
    if (bj != t) swap_cols(bj, t);
    return true;
  }

  void reduce_pivot(std::size_t t) {
    const std::size_t m = a_.m;
    const std::size_t n = a_.n;
    for (;;) {
      bool column_dirty = false;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (a_(i, t) == 0) continue;
        row_submul(i, t, nearest_quotient(a_(i, t), a_(t, t)));
        if (a_(i, t) != 0) column_dirty = true;
      }
      if (column_dirty) {
        bring_min_to(t, t, m, t, t + 1);
        continue;
      }
      bool row_dirty = false;
      for (std::size_t j = t + 1; j < n; ++j) {
        if (a_(t, j) == 0) continue;
        col_submul(j, t, nearest_quotient(a_(t, j), a_(t, t)));
        if (a_(t, j) != 0) row_dirty = true;
      }
      if (row_dirty) {
        bring_min_to(t, t, t + 1, t, n);
        continue;
      }
      if (A::abs(a_(t, t)) == 1) return;
      std::size_t bad = m;
      for (std::size_t i = t + 1; i < m && bad == m; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (a_(i, j) % a_(t, t) != 0) {
            bad = i;
            break;
          }
      if (bad == m) return;
      // row t += row bad
      row_submul(t, bad, T(-1));
    }
  }

  // row i -= q * row k
  void row_submul(std::size_t i, std::size_t k, const T& q) {
    for (std::size_t c = 0; c < a_.n; ++c)
      if (a_(k, c) != 0) a_(i, c) = A::submul(a_(i, c), q, a_(k, c));
    if (request_.u)
      for (std::size_t c = 0; c < u_.n; ++c)
        if (u_(k, c) != 0) u_(i, c) = A::submul(u_(i, c), q, u_(k, c));
    if (request_.u_inv) {
      T mq = A::neg(q);
      for (std::size_t r = 0; r < u_inv_.m; ++r)
        if (u_inv_(r, i) != 0) u_inv_(r, k) = A::submul(u_inv_(r, k), mq, u_inv_(r, i));
    }
  }

  // col j -= q * col k
  void col_submul(std::size_t j, std::size_t k, const T& q) {
    for (std::size_t r = 0; r < a_.m; ++r)
      if (a_(r, k) != 0) a_(r, j) = A::submul(a_(r, j), q, a_(r, k));
    if (request_.v)
      for (std::size_t r = 0; r < v_.m; ++r)
        if (v_(r, k) != 0) v_(r, j) = A::submul(v_(r, j), q, v_(r, k));
    if (request_.v_inv) {
      T mq = A::neg(q);
      for (std::size_t c = 0; c < v_inv_.n; ++c)
        if (v_inv_(j, c) != 0) v_inv_(k, c) = A::submul(v_inv_(k, c), mq, v_inv_(j, c));
    }
  }

  void swap_rows(std::size_t i, std::size_t k) {
    for (std::size_t c = 0; c < a_.n; ++c) std::swap(a_(i, c), a_(k, c));
    if (request_.u)
      for (std::size_t c = 0; c < u_.n; ++c) std::swap(u_(i, c), u_(k, c));
    if (request_.u_inv)
      for (std::size_t r = 0; r < u_inv_.m; ++r) std::swap(u_inv_(r, i), u_inv_(r, k));
  }

  void swap_cols(std::size_t j, std::size_t k) {
    for (std::size_t r = 0; r < a_.m; ++r) std::swap(a_(r, j), a_(r, k));
    if (request_.v)
      for (std::size_t r = 0; r < v_.m; ++r) std::swap(v_(r, j), v_(r, k));
    if (request_.v_inv)
      for (std::size_t c = 0; c < v_inv_.n; ++c) std::swap(v_inv_(j, c), v_inv_(k, c));
  }

  void negate_row(std::size_t t) {
    for (std::size_t c = 0; c < a_.n; ++c) a_(t, c) = A::neg(a_(t, c));
    if (request_.u)
      for (std::size_t c = 0; c < u_.n; ++c) u_(t, c) = A::neg(u_(t, c));
    if (request_.u_inv)
      for (std::size_t r = 0; r < u_inv_.m; ++r) u_inv_(r, t) = A::neg(u_inv_(r, t));
  }

  detail::SmithRequest request_;
  Dense<T> a_, u_, u_inv_, v_, v_inv_;
};

bool fits_fast_path(const IntMatrix& a) {
  static const Integer bound = Integer(1) << 40;
  for (const auto& x : a.entries()) {
    if (x >= bound || x <= -bound) return false;
  }
  return true;
}

}  // namespace

namespace detail {

SmithTransforms smith(const IntMatrix& a, SmithRequest request) {
  if (fits_fast_path(a)) {
    try {
      return Eliminator<long long>(a, request).run();
    } catch (const Overflow&) {
      // fall through to arbitrary precision
    }
  }
  return Eliminator<Integer>(a, request).run();
}

}  // namespace detail

Vector SmithDecomposition::diagonal() const {
  Vector d;
  for (std::size_t k = 0; k < rank; ++k) d.push_back(s(k, k));
  return d;
}

SmithDecomposition smith_normal_form(const IntMatrix& a) {
  auto t = detail::smith(a, {.u = true, .u_inv = false, .v = true, .v_inv = false});
  SmithDecomposition out;
  out.u = std::move(t.u);
  out.v = std::move(t.v);
  out.rank = t.diagonal.size();
  out.s = IntMatrix(a.rows(), a.cols());
  for (std::size_t k = 0; k < out.rank; ++k) out.s(k, k) = t.diagonal[k];
  return out;
}

std::optional<Vector> solve_linear(const IntMatrix& a, const Vector& b) {
  if (b.size() != a.rows()) throw InputError("solve_linear: right-hand side has wrong length");
  auto t = detail::smith(a, {.u = true, .u_inv = false, .v = true, .v_inv = false});
  const std::size_t r = t.diagonal.size();
  Vector y = t.u * b;
  Vector z = zero_vector(a.cols());
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (i < r) {
      if (y[i] % t.diagonal[i] != 0) return std::nullopt;
      z[i] = y[i] / t.diagonal[i];
    } else if (y[i] != 0) {
      return std::nullopt;
    }
  }
  return t.v * z;
}

IntMatrix kernel_basis(const IntMatrix& a) {
  auto t = detail::smith(a, {.u = false, .u_inv = false, .v = true, .v_inv = false});
  const std::size_t r = t.diagonal.size();
  return t.v.select_columns(r, a.cols() - r);
}

Lattice Lattice::spanned_by(const IntMatrix& generators) {
  Lattice l;
  l.dimension_ = generators.rows();
  auto t = detail::smith(generators, {.u = true, .u_inv = true, .v = false, .v_inv = false});
  l.u_ = std::move(t.u);
  l.u_inv_ = std::move(t.u_inv);
  l.factors_ = std::move(t.diagonal);
  l.basis_ = IntMatrix(l.dimension_, l.factors_.size());
  for (std::size_t k = 0; k < l.factors_.size(); ++k)
    for (std::size_t i = 0; i < l.dimension_; ++i) l.basis_(i, k) = l.u_inv_(i, k) * l.factors_[k];
  return l;
}

Lattice Lattice::full(std::size_t dimension) {
  Lattice l;
  l.dimension_ = dimension;
  l.u_ = IntMatrix::identity(dimension);
  l.u_inv_ = IntMatrix::identity(dimension);
  l.factors_ = Vector(dimension, Integer(1));
  l.basis_ = IntMatrix::identity(dimension);
  return l;
}

std::optional<Vector> Lattice::coordinates(const Vector& v) const {
  if (v.size() != dimension_) throw InputError("lattice coordinates: wrong dimension");
  Vector y = u_ * v;
  Vector c(factors_.size());
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (i < factors_.size()) {
      if (y[i] % factors_[i] != 0) return std::nullopt;
      c[i] = y[i] / factors_[i];
    } else if (y[i] != 0) {
      return std::nullopt;
    }
  }
  return c;
}

bool Lattice::contains(const Vector& v) const { return coordinates(v).has_value(); }

Vector Lattice::reduce(const Vector& v) const {
  if (v.size() != dimension_) throw InputError("lattice reduce: wrong dimension");
  Vector y = u_ * v;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    y[i] %= factors_[i];
    if (y[i] < 0) y[i] += factors_[i];
  }
  return u_inv_ * y;
}

Lattice preimage(const IntMatrix& a, const Lattice& target) {
  if (a.rows() != target.dimension()) throw InputError("preimage: dimension mismatch");
  const std::size_t n = a.cols();
  IntMatrix b = target.smith_u() * a;
  const Vector& d = target.invariant_factors();
  std::vector<std::size_t> rows;
  std::vector<Integer> moduli;
  for (std::size_t i = 0; i < b.rows(); ++i) {
    if (i < d.size() && d[i] == 1) continue;
    rows.push_back(i);
    moduli.push_back(i < d.size() ? d[i] : Integer(0));
  }
  if (rows.empty()) return Lattice::full(n);
  std::size_t extra = 0;
  for (const auto& mod : moduli)
    if (mod != 0) ++extra;
  IntMatrix system(rows.size(), n + extra);
  std::size_t col = n;
  for (std::size_t k = 0; k < rows.size(); ++k) {
    for (std::size_t j = 0; j < n; ++j) system(k, j) = b(rows[k], j);
    if (moduli[k] != 0) system(k, col++) = -moduli[k];
  }
  IntMatrix ker = kernel_basis(system);
  return Lattice::spanned_by(ker.select_rows(0, n));
}

}  // namespace picard
