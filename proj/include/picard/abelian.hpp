#pragma once

#include "picard/int_matrix.hpp"
#include "picard/smith.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace picard {

/// Isomorphism type of a finitely generated abelian group: Z^free_rank plus
/// cyclic factors in divisibility order.
struct Invariants {
  std::size_t free_rank = 0;
  Vector factors;

  bool is_trivial() const { return free_rank == 0 && factors.empty(); }
  bool is_finite() const { return free_rank == 0; }
  Integer order() const;
  std::string to_string() const;

  friend bool operator==(const Invariants&, const Invariants&) = default;
};

/// Z^n modulo the column lattice of `relations`. Presentations are kept as
/// given; the canonical form is cached at construction.
class FgAbGroup {
 public:
  FgAbGroup();
  FgAbGroup(std::size_t ambient_rank, IntMatrix relations);

  static FgAbGroup free(std::size_t rank);
  /// Z/order, or Z when order is 0.
  static FgAbGroup cyclic(const Integer& order);
  /// Direct sum of cyclic groups, 0 meaning Z.
  static FgAbGroup from_orders(const std::vector<long long>& orders);
  static FgAbGroup from_invariants(const Invariants& inv);

  std::size_t ambient_rank() const { return data_->ambient; }
  const IntMatrix& relations() const { return data_->relations; }
  const Lattice& relation_lattice() const { return data_->lattice; }
  const Invariants& invariants() const { return data_->invariants; }

  bool is_trivial() const { return invariants().is_trivial(); }
  bool is_finite() const { return invariants().is_finite(); }
  /// True when the relation lattice is zero, so the group is Z^ambient on the nose.
  bool is_free() const { return relation_lattice().rank() == 0; }
  Integer order() const { return invariants().order(); }

  bool is_zero_element(const Vector& x) const { return relation_lattice().contains(x); }
  bool equal_elements(const Vector& x, const Vector& y) const { return is_zero_element(x - y); }
  /// Canonical representative of the class of x.
  Vector reduce(const Vector& x) const { return relation_lattice().reduce(x); }

  /// Identical presentations (not merely isomorphic groups).
  friend bool operator==(const FgAbGroup& a, const FgAbGroup& b);

 private:
  struct Data {
    std::size_t ambient = 0;
    IntMatrix relations;
    Lattice lattice;
    Invariants invariants;
  };
  std::shared_ptr<const Data> data_;
};

bool is_isomorphic(const FgAbGroup& a, const FgAbGroup& b);
FgAbGroup direct_sum(const FgAbGroup& a, const FgAbGroup& b);
FgAbGroup direct_power(const FgAbGroup& g, std::size_t copies);

Invariants canonical_invariants(const FgAbGroup& g);

class GroupElement {
 public:
  GroupElement(FgAbGroup group, Vector coords);
  static GroupElement zero(const FgAbGroup& group);

  const FgAbGroup& group() const { return group_; }
  const Vector& coords() const { return coords_; }
  bool is_zero() const { return group_.is_zero_element(coords_); }

  friend bool operator==(const GroupElement& a, const GroupElement& b);
  friend GroupElement operator+(const GroupElement& a, const GroupElement& b);
  friend GroupElement operator-(const GroupElement& a, const GroupElement& b);
  friend GroupElement operator*(const Integer& c, const GroupElement& a);

 private:
  FgAbGroup group_;
  Vector coords_;
};

/// Homomorphism given by its action on ambient generators; well-definedness
/// (relations go to relations) is checked on construction.
class GroupHom {
 public:
  GroupHom() = default;
  GroupHom(FgAbGroup source, FgAbGroup target, IntMatrix matrix);

  static GroupHom zero(const FgAbGroup& source, const FgAbGroup& target);
  static GroupHom identity(const FgAbGroup& g);

  const FgAbGroup& source() const { return source_; }
  const FgAbGroup& target() const { return target_; }
  const IntMatrix& matrix() const { return matrix_; }

  Vector apply(const Vector& x) const { return matrix_ * x; }
  GroupElement operator()(const GroupElement& x) const;

  bool is_zero() const;
  bool is_injective() const;
  bool is_surjective() const;
  bool is_isomorphism() const { return is_injective() && is_surjective(); }

  /// Equal as homomorphisms: same presentations, images agree modulo relations.
  friend bool operator==(const GroupHom& f, const GroupHom& g);
  friend GroupHom operator+(const GroupHom& f, const GroupHom& g);
  friend GroupHom operator-(const GroupHom& f, const GroupHom& g);
  friend GroupHom operator-(const GroupHom& f);
  friend GroupHom operator*(const Integer& c, const GroupHom& f);

 private:
  FgAbGroup source_;
  FgAbGroup target_;
  IntMatrix matrix_;
};

/// g after f.
GroupHom compose(const GroupHom& g, const GroupHom& f);
GroupHom direct_sum(const GroupHom& f, const GroupHom& g);

/// top / bottom for lattices bottom <= top <= Z^n, presented on a basis of top.
class Subquotient {
 public:
  Subquotient() = default;
  Subquotient(Lattice top, const IntMatrix& bottom_generators);

  const FgAbGroup& group() const { return group_; }
  const Lattice& top() const { return top_; }
  /// Group coordinates of an ambient vector of top; throws InputError otherwise.
  Vector coordinates(const Vector& v) const;
  std::optional<Vector> try_coordinates(const Vector& v) const { return top_.coordinates(v); }
  /// Ambient vector representing the given group coordinates.
  Vector lift(const Vector& coords) const { return top_.basis() * coords; }

 private:
  Lattice top_;
  FgAbGroup group_;
};

struct KernelResult {
  FgAbGroup group;
  GroupHom inclusion;
};
struct CokernelResult {
  FgAbGroup group;
  GroupHom projection;
};
struct PullbackResult {
  FgAbGroup group;
  GroupHom pr1;
  GroupHom pr2;
};
struct PushoutResult {
  FgAbGroup group;
  GroupHom in1;
  GroupHom in2;
};

KernelResult kernel(const GroupHom& f);
CokernelResult cokernel(const GroupHom& f);
/// im(f) = ker(g) for f: a -> b, g: b -> c.
bool is_exact_at(const GroupHom& f, const GroupHom& g);
/// {(x, y) : f(x) = g(y)} for f: a -> c, g: b -> c.
PullbackResult pullback_group(const GroupHom& f, const GroupHom& g);
/// (a + b) / <(f(x), -g(x))> for f: c -> a, g: c -> b.
PushoutResult pushout_group(const GroupHom& f, const GroupHom& g);

/// Hom(a, b), presented as a quotient of the lattice of matrices A with
/// A * rel(a) inside rel(b) by the matrices landing in rel(b).
class HomGroup {
 public:
  HomGroup(FgAbGroup source, FgAbGroup target);

  const FgAbGroup& group() const { return classes_.group(); }
  GroupHom lift(const Vector& coords) const;
  Vector coordinates(const GroupHom& f) const;

 private:
  FgAbGroup source_;
  FgAbGroup target_;
  Subquotient classes_;
};

HomGroup hom_group(const FgAbGroup& a, const FgAbGroup& b);
/// Ext^1(a, b) as coker(Hom(F, b) -> Hom(R, b)) for the presentation 0 -> R -> F -> a -> 0.
FgAbGroup ext1_group(const FgAbGroup& a, const FgAbGroup& b);

/// Every element of a finite group exactly once, zero first.
std::vector<GroupElement> enumerate_elements(const FgAbGroup& g);

}  // namespace picard
