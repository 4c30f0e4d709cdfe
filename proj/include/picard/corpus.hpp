#pragma once

#include "picard/complexes.hpp"

#include <cstdint>
#include <optional>
#include <random>

namespace picard {

/// Seeded generator of small random groups, maps, complexes and chain maps.
/// The same seed always produces the same sequence of objects.
class Corpus {
 public:
  explicit Corpus(std::uint64_t seed) : rng_(seed) {}

  std::mt19937_64& rng() { return rng_; }
  int uniform(int lo, int hi);
  bool coin(int percent);

  /// Up to max_ambient cyclic generators of order <= max_order (or Z when
  /// allow_free), presented in a scrambled basis.
  FgAbGroup group(int max_ambient = 2, int max_order = 4, bool allow_free = true);
  FgAbGroup finite_group(int max_ambient = 2, int max_order = 4) { return group(max_ambient, max_order, false); }

  IntMatrix unimodular(std::size_t n, int steps = 4);
  /// A random well-defined homomorphism.
  GroupHom hom(const FgAbGroup& a, const FgAbGroup& b, int coef = 3);
  TwoTermComplex complex(int max_ambient = 2, int max_order = 4, bool allow_free = true);
  /// A two-term complex with finite cohomology of order at most max_cohomology in each degree.
  TwoTermComplex finite_complex(int max_ambient = 2, int max_order = 4, int max_cohomology = 16);
  /// A random chain map k -> l (uniform-ish over small combinations of a lattice basis).
  ChainMap chain_map(const TwoTermComplex& k, const TwoTermComplex& l, int coef = 2);

 private:
  std::mt19937_64 rng_;
};

/// All chain maps k -> l as a lattice in vec(f^{-1}) + vec(f^0) coordinates.
Lattice chain_map_lattice(const TwoTermComplex& k, const TwoTermComplex& l);
ChainMap chain_map_from_vector(const TwoTermComplex& k, const TwoTermComplex& l, const Vector& v);

}  // namespace picard
