#pragma once

#include "picard/complexes.hpp"

#include <memory>
#include <optional>
#include <vector>

namespace picard {

/// Total Hom complex Hom(P, C) for P with free components:
/// Hom^n = prod_a Hom(P^a, C^{a+n}), (D f)_a = d_C f_a - (-1)^n f_{a+1} d_P.
/// A degree-n element is stored as the concatenation of vec(f_a) over a = P.lo() .. P.hi().
class HomComplex {
 public:
  HomComplex(BoundedComplex p, BoundedComplex c);

  const BoundedComplex& source() const { return p_; }
  const BoundedComplex& target() const { return c_; }
  const BoundedComplex& complex() const { return hom_; }

  Vector pack(int n, const std::vector<IntMatrix>& blocks) const;
  std::vector<IntMatrix> unpack(int n, const Vector& v) const;

  Vector pack(const ChainMap& f) const;
  ChainMap unpack_chain_map(const Vector& v) const;
  Homotopy unpack_homotopy(const ChainMap& from, const ChainMap& to, const Vector& v) const;

  /// Matrix of f |-> phi o f on degree-n elements, for phi: C -> C'.
  IntMatrix postcompose_matrix(int n, const ChainMap& phi, const BoundedComplex& c_new) const;

 private:
  int block_offset(int n, int a) const;
  int span_lo() const;
  int span_hi() const;

  BoundedComplex p_;
  BoundedComplex c_;
  BoundedComplex hom_;
};

/// H^0 of Hom(P, L): chain maps modulo null-homotopic ones.
class HomotopyClassGroup {
 public:
  HomotopyClassGroup(const BoundedComplex& p, const BoundedComplex& l);

  const FgAbGroup& group() const { return h0_.group(); }
  const HomComplex& hom_complex() const { return hom_; }
  ChainMap representative(const Vector& coords) const;
  Vector class_of(const ChainMap& f) const;

 private:
  HomComplex hom_;
  Cohomology h0_;
};

HomotopyClassGroup chain_maps_mod_homotopy(const BoundedComplex& p, const BoundedComplex& l);

/// A homotopy from f to g when one exists (P free).
std::optional<Homotopy> find_homotopy(const ChainMap& f, const ChainMap& g);

/// Some g: P -> A with phi g homotopic to h, for P free and phi: A -> B a quasi-isomorphism.
ChainMap lift_along_quasi_isomorphism(const ChainMap& phi, const ChainMap& h);

/// Hom_D(K, L[i]) computed on the free resolution of K.
class DerivedHomGroup {
 public:
  DerivedHomGroup(TwoTermComplex k, TwoTermComplex l, int degree, Resolution resolution);

  const FgAbGroup& group() const { return classes_.group(); }
  int degree() const { return degree_; }
  const TwoTermComplex& source() const { return k_; }
  const TwoTermComplex& target() const { return l_; }
  const BoundedComplex& shifted_target() const { return shifted_; }
  const Resolution& resolution() const { return resolution_; }
  const HomotopyClassGroup& classes() const { return classes_; }
  /// One chain map per ambient generator of group().
  const std::vector<ChainMap>& representatives() const { return representatives_; }

  /// Chain map resolution -> L[i] representing coords.
  ChainMap representative(const Vector& coords) const { return classes_.representative(coords); }
  Vector class_of(const ChainMap& f) const { return classes_.class_of(f); }

 private:
  TwoTermComplex k_;
  TwoTermComplex l_;
  int degree_;
  Resolution resolution_;
  BoundedComplex shifted_;
  HomotopyClassGroup classes_;
  std::vector<ChainMap> representatives_;
};

/// Memoized; i must be -1, 0 or 1.
std::shared_ptr<const DerivedHomGroup> derived_hom(const TwoTermComplex& k, const TwoTermComplex& l, int i);
/// Uncached, on a caller-supplied resolution of k.
DerivedHomGroup derived_hom(const TwoTermComplex& k, const TwoTermComplex& l, int i, const Resolution& resolution);

/// Hom_D(K, L[i]) -> Hom_D(K, L'[i]) induced by g: L -> L'.
GroupHom derived_postcompose(const DerivedHomGroup& from, const DerivedHomGroup& to, const ChainMap& g);
/// Hom_D(K, L[i]) -> Hom_D(K', L[i]) induced by f: K' -> K.
GroupHom derived_precompose(const DerivedHomGroup& from, const DerivedHomGroup& to, const ChainMap& f);

/// tau<=0 Hom(P, L) for the free resolution P of K.
TwoTermComplex hom_stack_complex(const TwoTermComplex& k, const TwoTermComplex& l);

struct PiEpsilonSequence {
  Cohomology h_minus1;
  Cohomology h0;
  GroupHom inclusion;   // H^{-1} -> K^{-1}
  GroupHom d;           // K^{-1} -> K^0
  GroupHom projection;  // K^0 -> H^0
  bool exact = false;
  /// [H^{-1} --0--> H^0] and a quasi-isomorphism onto it from the resolution of K;
  /// its existence is the vanishing of the extension class of H^0 by H^{-1}[1].
  TwoTermComplex split_form;
  Resolution resolution;
  ChainMap splitting;
  bool trivial_class = false;
};

PiEpsilonSequence pi_epsilon_sequence(const TwoTermComplex& k);

}  // namespace picard
