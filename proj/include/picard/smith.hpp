#pragma once

#include "picard/int_matrix.hpp"

#include <optional>

namespace picard {

/// u * a * v = s with u, v unimodular and s diagonal, d_1 | d_2 | ... | d_rank, all d_i > 0.
struct SmithDecomposition {
  IntMatrix u;
  IntMatrix s;
  IntMatrix v;
  std::size_t rank = 0;

  Vector diagonal() const;
};

SmithDecomposition smith_normal_form(const IntMatrix& a);

/// Some integer x with a * x = b, or nullopt when none exists.
std::optional<Vector> solve_linear(const IntMatrix& a, const Vector& b);

/// Basis (as columns) of the integer kernel {x : a * x = 0}.
IntMatrix kernel_basis(const IntMatrix& a);

namespace detail {

/// Full set of transforms; the inverses are only filled on request.
struct SmithTransforms {
  IntMatrix u, u_inv, v, v_inv;
  Vector diagonal;  // the rank-many nonzero invariant factors
};

struct SmithRequest {
  bool u = true;
  bool u_inv = false;
  bool v = true;
  bool v_inv = false;
};

SmithTransforms smith(const IntMatrix& a, SmithRequest request);

}  // namespace detail

/// A sublattice of Z^n, stored by the Smith data of a generating set so that
/// membership and coordinates are a matrix-vector product away.
class Lattice {
 public:
  Lattice() = default;
  static Lattice spanned_by(const IntMatrix& generators);
  static Lattice full(std::size_t dimension);

  std::size_t dimension() const { return dimension_; }
  std::size_t rank() const { return basis_.cols(); }
  /// Columns form a Z-basis of the lattice.
  const IntMatrix& basis() const { return basis_; }

  bool contains(const Vector& v) const;
  /// Coordinates c with basis() * c = v; nullopt if v is outside.
  std::optional<Vector> coordinates(const Vector& v) const;
  /// Canonical representative of v modulo the lattice.
  Vector reduce(const Vector& v) const;

  /// Smith coordinates: u * v; the first rank() entries are divided by the invariant factors.
  const IntMatrix& smith_u() const { return u_; }
  const IntMatrix& smith_u_inv() const { return u_inv_; }
  const Vector& invariant_factors() const { return factors_; }

 private:
  std::size_t dimension_ = 0;
  IntMatrix basis_;
  IntMatrix u_;
  IntMatrix u_inv_;
  Vector factors_;
};

/// {x in Z^{a.cols()} : a * x in target}, where target is a sublattice of Z^{a.rows()}.
Lattice preimage(const IntMatrix& a, const Lattice& target);

}  // namespace picard
