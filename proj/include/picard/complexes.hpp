#pragma once

#include "picard/abelian.hpp"

#include <optional>
#include <string>
#include <vector>

namespace picard {

/// Cochain complex of presented groups concentrated in degrees lo() .. hi().
/// Components outside that range are zero.
class BoundedComplex {
 public:
  BoundedComplex() = default;
  /// differentials[k] goes from components[k] to components[k + 1].
  BoundedComplex(int lo, std::vector<FgAbGroup> components, std::vector<GroupHom> differentials);

  static BoundedComplex zero(int lo = 0) { return BoundedComplex(lo, {}, {}); }
  /// A single group placed in degree n.
  static BoundedComplex concentrated(const FgAbGroup& g, int n);

  int lo() const { return lo_; }
  int hi() const { return lo_ + static_cast<int>(components_.size()) - 1; }
  std::size_t length() const { return components_.size(); }
  bool in_range(int n) const { return n >= lo() && n <= hi(); }

  FgAbGroup at(int n) const;
  /// d^n : K^n -> K^{n+1}
  GroupHom d(int n) const;

  bool has_free_components() const;

 private:
  int lo_ = 0;
  std::vector<FgAbGroup> components_;
  std::vector<GroupHom> differentials_;
};

/// [K^{-1} -> K^0]
class TwoTermComplex : public BoundedComplex {
 public:
  TwoTermComplex() : TwoTermComplex(GroupHom::zero(FgAbGroup(), FgAbGroup())) {}
  explicit TwoTermComplex(const GroupHom& d);
  TwoTermComplex(const FgAbGroup& minus1, const FgAbGroup& zero, const IntMatrix& d);

  /// g alone in degree n, for n in {-1, 0}.
  static TwoTermComplex in_degree(const FgAbGroup& g, int n);
  /// Accepts any complex supported in [-1, 0].
  static TwoTermComplex from_bounded(const BoundedComplex& k);

  FgAbGroup deg_minus1() const { return at(-1); }
  FgAbGroup deg0() const { return at(0); }
  GroupHom differential() const { return d(-1); }
};

TwoTermComplex direct_sum(const TwoTermComplex& a, const TwoTermComplex& b);
/// A string identifying the presentation exactly; used as a cache key.
std::string presentation_key(const BoundedComplex& k);
BoundedComplex direct_sum(const BoundedComplex& a, const BoundedComplex& b);

/// Degreewise maps f^n for n in the source's range.
class ChainMap {
 public:
  ChainMap() = default;
  ChainMap(BoundedComplex source, BoundedComplex target, std::vector<GroupHom> maps);
  /// Two-term shorthand from the two matrices.
  ChainMap(const TwoTermComplex& source, const TwoTermComplex& target, const IntMatrix& f_minus1,
           const IntMatrix& f0);

  static ChainMap zero(const BoundedComplex& source, const BoundedComplex& target);
  static ChainMap identity(const BoundedComplex& k);

  const BoundedComplex& source() const { return source_; }
  const BoundedComplex& target() const { return target_; }
  GroupHom at(int n) const;

  friend bool operator==(const ChainMap& f, const ChainMap& g);
  friend ChainMap operator+(const ChainMap& f, const ChainMap& g);
  friend ChainMap operator-(const ChainMap& f, const ChainMap& g);
  friend ChainMap operator-(const ChainMap& f);

 private:
  BoundedComplex source_;
  BoundedComplex target_;
  std::vector<GroupHom> maps_;
};

/// g after f.
ChainMap compose(const ChainMap& g, const ChainMap& f);
ChainMap direct_sum(const ChainMap& f, const ChainMap& g);
bool is_zero(const ChainMap& f);

/// to - from = dH + Hd, with h[n] : source^n -> target^{n-1} for n in the source's range.
struct Homotopy {
  ChainMap from;
  ChainMap to;
  std::vector<GroupHom> h;

  GroupHom at(int n) const;
  bool verify() const;
};

struct Cohomology {
  int degree = 0;
  Subquotient classes;  // cycles modulo boundaries, in ambient coordinates of K^degree

  const FgAbGroup& group() const { return classes.group(); }
};

Cohomology cohomology(const BoundedComplex& k, int n);
/// H^n(f)
GroupHom induced_map(const ChainMap& f, int n);
GroupHom induced_map(const ChainMap& f, int n, const Cohomology& hs, const Cohomology& ht);

/// H^{-1}, the group of automorphisms of the zero object on the stack side.
inline Cohomology pi1(const TwoTermComplex& k) { return cohomology(k, -1); }
/// H^0, the group of isomorphism classes on the stack side.
inline Cohomology pi0(const TwoTermComplex& k) { return cohomology(k, 0); }

bool is_acyclic(const BoundedComplex& k);
bool is_quasi_isomorphism(const ChainMap& f);

/// (K[i])^n = K^{n+i}, differential multiplied by (-1)^i.
BoundedComplex shift(const BoundedComplex& k, int i);
/// Same degreewise maps between shifted complexes.
ChainMap shift(const ChainMap& f, int i);

enum class TruncationMode { AtMost, AtLeast };

struct Truncation {
  BoundedComplex complex;
  /// tau<=n K -> K for AtMost; K -> tau>=n K for AtLeast.
  ChainMap map;
  /// AtMost with an actual cut: the cycle lattice in K^n whose basis presents degree n.
  std::optional<Lattice> cycles;
};

/// Good truncation: kernel of d^n in degree n (AtMost) or cokernel of d^{n-1} (AtLeast).
Truncation truncate(const BoundedComplex& k, TruncationMode mode, int n);

struct Cone {
  BoundedComplex complex;
  ChainMap inclusion;   // L -> MC(f)
  ChainMap projection;  // MC(f) -> K[1]
};

/// MC(f)^n = L^n + K^{n+1}, d(l, k) = (d_L l + f k, -d_K k).
Cone mapping_cone(const ChainMap& f);

struct KernelComplex {
  TwoTermComplex complex;
  ChainMap inclusion;  // into the source of f
  Lattice cycles;      // degree 0 as a lattice in T^{-1} + S^0
};

struct CokernelComplex {
  TwoTermComplex complex;
  ChainMap projection;  // from the target of f
};

/// tau<=0 (MC(f)[-1]) = [K^{-1} -> ker(d_L, f^0)]
KernelComplex kernel_complex(const ChainMap& f);
/// tau>=-1 MC(f) = [coker(f^{-1}, -d_K) -> L^0]
CokernelComplex cokernel_complex(const ChainMap& f);

/// Factor h: X -> K with f h = 0 (strictly) through kernel_complex(f).
ChainMap lift_to_kernel_complex(const KernelComplex& ker, const ChainMap& f, const ChainMap& h);
/// Factor h: L -> X with h f = 0 (strictly) through cokernel_complex(f).
ChainMap descend_from_cokernel_complex(const CokernelComplex& coker, const ChainMap& f, const ChainMap& h);

struct FiberedProduct {
  TwoTermComplex complex;
  ChainMap pr1;
  ChainMap pr2;
};

struct FiberedSum {
  TwoTermComplex complex;
  ChainMap in1;
  ChainMap in2;
};

/// Degreewise pullback of f: K -> M and g: L -> M.
FiberedProduct fibered_product_complex(const ChainMap& f, const ChainMap& g);
/// Degreewise pushout of f: M -> K and g: M -> L.
FiberedSum fibered_sum_complex(const ChainMap& f, const ChainMap& g);
/// kernel_complex of (f, -g): K + L -> M; the square commutes up to homotopy.
FiberedProduct homotopy_fibered_product(const ChainMap& f, const ChainMap& g);
/// cokernel_complex of (f, -g)^T: M -> K + L; the square commutes up to homotopy.
FiberedSum homotopy_fibered_sum(const ChainMap& f, const ChainMap& g);

/// Degreewise short exact 0 -> N -> P -> M -> 0 with P, N free.
struct FreeCover {
  TwoTermComplex p_complex;
  TwoTermComplex n_complex;
  ChainMap p;  // P -> M, degreewise surjective
  ChainMap s;  // N -> P, degreewise kernel inclusion
};

/// P^{-1} free on the generators of M^{-1}, P^0 = P^{-1} + free on the generators of M^0.
FreeCover free_cover(const TwoTermComplex& m);
/// Same construction with extra generators mapped to the given columns of M^{-1} and M^0.
FreeCover free_cover(const TwoTermComplex& m, const IntMatrix& extra_minus1, const IntMatrix& extra0);

struct Resolution {
  BoundedComplex complex;  // MC(s), free, degrees [-2, 0]
  ChainMap quasi_iso;      // MC(s) -> M
  FreeCover cover;
};

Resolution free_resolution(const TwoTermComplex& m);
Resolution free_resolution(const FreeCover& cover, const TwoTermComplex& m);

}  // namespace picard
