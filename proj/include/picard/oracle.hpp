#pragma once

#include "picard/complexes.hpp"

#include <cstdint>
#include <vector>

/// Brute-force cross-checks. Nothing here calls into Smith normal form or the
/// derived-category code; finite groups are modelled by their own Hermite form.
namespace picard::oracle {

/// A finite group Z^n / R with elements numbered 0 .. size()-1, element 0 being zero.
class FiniteModel {
 public:
  /// Throws DomainError when the group is infinite or has more than max_size elements.
  explicit FiniteModel(const FgAbGroup& g, std::int64_t max_size = 1 << 20);

  std::int64_t size() const { return size_; }
  std::size_t ambient_rank() const { return radix_.size(); }

  std::int64_t index_of(const Vector& v) const;
  std::vector<std::int64_t> element(std::int64_t index) const;
  std::int64_t add(std::int64_t a, std::int64_t b) const;
  std::int64_t negate(std::int64_t a) const;
  std::int64_t multiple(std::int64_t a, std::int64_t c) const;

 private:
  std::vector<std::int64_t> reduce(std::vector<std::int64_t> v) const;

  /// Lower triangular column Hermite basis of the relation lattice.
  std::vector<std::vector<std::int64_t>> hnf_;
  std::vector<std::int64_t> radix_;
  std::int64_t size_ = 1;
};

/// Normalized symmetric 2-cocycle base x base -> fiber, indexed by FiniteModel numbering.
struct FactorSet {
  FgAbGroup base;
  FgAbGroup fiber;
  /// table[x * |base| + y] is a fiber element index.
  std::vector<std::int64_t> table;

  bool is_normalized() const;
  bool is_symmetric() const;
  bool is_cocycle() const;
};

/// Number of homomorphisms a -> b, by trying every tuple of generator images.
std::uint64_t brute_force_hom_count(const FgAbGroup& a, const FgAbGroup& b);

/// Ext^1(b, a) as symmetric 2-cocycles modulo coboundaries. Guard: |a| |b|^2 <= 10^4.
FgAbGroup ext1_by_factor_sets(const FgAbGroup& b, const FgAbGroup& a);

/// Isomorphism type of a finite group from the number of elements killed by each prime power.
Invariants invariants_by_counting(const FgAbGroup& g);

/// Hom_D(k, l[i]) assembled from Hom and Ext^1 of the cohomology groups.
FgAbGroup splitting_formula_ext(const TwoTermComplex& k, const TwoTermComplex& l, int i);

}  // namespace picard::oracle
