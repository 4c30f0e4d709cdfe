#include "picard/corpus.hpp"
#include "picard/derived.hpp"
#include "picard/errors.hpp"

#include <gtest/gtest.h>

using namespace picard;

namespace {

Invariants inv(std::size_t free_rank, std::vector<long long> factors) {
  Invariants r;
  r.free_rank = free_rank;
  for (long long f : factors) r.factors.emplace_back(f);
  return r;
}

FgAbGroup z(long long n) { return FgAbGroup::cyclic(n); }
TwoTermComplex times(long long n) {
  return TwoTermComplex(FgAbGroup::free(1), FgAbGroup::free(1), IntMatrix{{n}});
}
Invariants h(const BoundedComplex& k, int n) { return cohomology(k, n).group().invariants(); }

}  // namespace

TEST(ChainMapsModHomotopy, Examples) {
  BoundedComplex p = BoundedComplex::concentrated(FgAbGroup::free(1), 0);
  Corpus c(21);
  for (int it = 0; it < 10; ++it) {
    TwoTermComplex l = c.complex();
    EXPECT_EQ(chain_maps_mod_homotopy(p, l).group().invariants(), h(l, 0));
  }
  EXPECT_TRUE(chain_maps_mod_homotopy(p, TwoTermComplex()).group().is_trivial());
  TwoTermComplex q = TwoTermComplex::in_degree(z(2), 0);
  EXPECT_EQ(chain_maps_mod_homotopy(free_resolution(q).complex, q).group().invariants(), inv(0, {2}));
  EXPECT_THROW(chain_maps_mod_homotopy(q, q), DomainError);
}

TEST(ChainMapsModHomotopy, LiftsDifferByHomotopy) {
  Corpus c(22);
  for (int it = 0; it < 20; ++it) {
    TwoTermComplex k = c.complex();
    TwoTermComplex l = c.complex();
    Resolution r = free_resolution(k);
    HomotopyClassGroup g = chain_maps_mod_homotopy(r.complex, l);
    Vector x(g.group().ambient_rank());
    for (auto& v : x) v = c.uniform(-2, 2);
    ChainMap f1 = g.representative(x);
    // add a null-homotopic map dH + Hd built from a random H
    const BoundedComplex& hc = g.hom_complex().complex();
    Vector hv(hc.at(-1).ambient_rank());
    for (auto& v : hv) v = c.uniform(-2, 2);
    Vector moved = g.hom_complex().pack(f1) + hc.d(-1).matrix() * hv;
    ChainMap f2 = g.hom_complex().unpack_chain_map(moved);
    EXPECT_TRUE(g.group().equal_elements(g.class_of(f1), g.class_of(f2)));
    auto witness = find_homotopy(f1, f2);
    ASSERT_TRUE(witness);
    EXPECT_TRUE(witness->verify());
    EXPECT_TRUE(g.group().equal_elements(g.class_of(f1), x));
  }
}

TEST(ChainMapsModHomotopy, ZeroRepresentativeIsNullHomotopic) {
  TwoTermComplex k = times(4);
  TwoTermComplex l = TwoTermComplex::in_degree(z(6), 0);
  Resolution r = free_resolution(k);
  HomotopyClassGroup g = chain_maps_mod_homotopy(r.complex, l);
  ChainMap zero = g.representative(zero_vector(g.group().ambient_rank()));
  EXPECT_TRUE(find_homotopy(ChainMap::zero(r.complex, l), zero).has_value());
}

TEST(DerivedHom, Examples) {
  TwoTermComplex k = times(2);
  EXPECT_EQ(derived_hom(k, k, 0)->group().invariants(), inv(0, {2}));
  EXPECT_EQ(derived_hom(k, k, 1)->group().invariants(), inv(0, {2}));
  TwoTermComplex a = TwoTermComplex::in_degree(z(2), 0);
  TwoTermComplex b = TwoTermComplex::in_degree(z(2), -1);
  EXPECT_EQ(derived_hom(a, b, -1)->group().invariants(), inv(0, {2}));
  EXPECT_THROW(derived_hom(a, b, 2), InputError);
}

TEST(DerivedHom, CacheReturnsSameObject) {
  TwoTermComplex k = times(3);
  auto g1 = derived_hom(k, k, 1);
  auto g2 = derived_hom(times(3), times(3), 1);
  EXPECT_EQ(g1.get(), g2.get());
}

TEST(DerivedHom, RepresentativesAreChainMaps) {
  Corpus c(23);
  for (int it = 0; it < 15; ++it) {
    TwoTermComplex k = c.complex(), l = c.complex();
    for (int i : {-1, 0, 1}) {
      auto g = derived_hom(k, l, i);
      ASSERT_EQ(g->representatives().size(), g->group().ambient_rank());
      for (std::size_t j = 0; j < g->representatives().size(); ++j) {
        Vector e = zero_vector(g->group().ambient_rank());
        e[j] = 1;
        EXPECT_TRUE(g->group().equal_elements(g->class_of(g->representatives()[j]), e));
      }
    }
  }
}

TEST(DerivedHom, ResolutionIndependence) {
  Corpus c(24);
  for (int it = 0; it < 30; ++it) {
    TwoTermComplex k = c.complex(), l = c.complex();
    IntMatrix e1(k.deg_minus1().ambient_rank(), 1), e0(k.deg0().ambient_rank(), 1);
    for (std::size_t r = 0; r < e1.rows(); ++r) e1(r, 0) = c.uniform(-3, 3);
    for (std::size_t r = 0; r < e0.rows(); ++r) e0(r, 0) = c.uniform(-3, 3);
    Resolution other = free_resolution(free_cover(k, e1, e0), k);
    for (int i : {-1, 0, 1})
      EXPECT_EQ(derived_hom(k, l, i)->group().invariants(), derived_hom(k, l, i, other).group().invariants());
  }
}

TEST(DerivedHom, PrecompositionWithQuasiIsoIsIso) {
  Corpus c(25);
  for (int it = 0; it < 20; ++it) {
    TwoTermComplex k = c.complex(), l = c.complex();
    // K' = K + [Z --1--> Z] with the projection, a quasi-isomorphism
    TwoTermComplex kp = direct_sum(k, times(1));
    IntMatrix p1(k.deg_minus1().ambient_rank(), kp.deg_minus1().ambient_rank());
    IntMatrix p0(k.deg0().ambient_rank(), kp.deg0().ambient_rank());
    p1.set_block(0, 0, IntMatrix::identity(k.deg_minus1().ambient_rank()));
    p0.set_block(0, 0, IntMatrix::identity(k.deg0().ambient_rank()));
    ChainMap q(kp, k, p1, p0);
    ASSERT_TRUE(is_quasi_isomorphism(q));
    for (int i : {-1, 0, 1}) {
      auto from = derived_hom(k, l, i);
      auto to = derived_hom(kp, l, i);
      EXPECT_TRUE(derived_precompose(*from, *to, q).is_isomorphism());
    }
  }
}

TEST(DerivedHom, PostcompositionIdentity) {
  Corpus c(26);
  for (int it = 0; it < 10; ++it) {
    TwoTermComplex k = c.complex(), l = c.complex();
    auto g = derived_hom(k, l, 1);
    GroupHom id = derived_postcompose(*g, *g, ChainMap::identity(l));
    EXPECT_EQ(id, GroupHom::identity(g->group()));
  }
}

TEST(HomStack, Examples) {
  Corpus c(27);
  TwoTermComplex k = c.complex();
  EXPECT_TRUE(is_acyclic(hom_stack_complex(k, TwoTermComplex())));
  TwoTermComplex zk = TwoTermComplex::in_degree(FgAbGroup::free(1), 0);
  for (int it = 0; it < 5; ++it) {
    TwoTermComplex l = c.complex();
    TwoTermComplex hs = hom_stack_complex(zk, l);
    EXPECT_EQ(h(hs, 0), h(l, 0));
    EXPECT_EQ(h(hs, -1), h(l, -1));
  }
  TwoTermComplex a = TwoTermComplex::in_degree(z(2), 0);
  TwoTermComplex hs = hom_stack_complex(times(2), a);
  EXPECT_EQ(h(hs, 0), inv(0, {2}));
  EXPECT_TRUE(cohomology(hs, -1).group().is_trivial());
}

TEST(HomStack, MatchesDerivedHomRandom) {
  Corpus c(28);
  for (int it = 0; it < 30; ++it) {
    TwoTermComplex k = c.complex(), l = c.complex();
    TwoTermComplex hs = hom_stack_complex(k, l);
    EXPECT_EQ(h(hs, 0), derived_hom(k, l, 0)->group().invariants());
    EXPECT_EQ(h(hs, -1), derived_hom(k, l, -1)->group().invariants());
  }
}

TEST(PiEpsilon, Examples) {
  TwoTermComplex k(FgAbGroup::from_orders({3, 0}), FgAbGroup::from_orders({4}), IntMatrix(1, 2));
  PiEpsilonSequence s = pi_epsilon_sequence(k);
  EXPECT_TRUE(s.exact);
  EXPECT_EQ(s.h_minus1.group().invariants(), k.deg_minus1().invariants());
  EXPECT_EQ(s.h0.group().invariants(), k.deg0().invariants());
  EXPECT_TRUE(s.trivial_class);
  PiEpsilonSequence t = pi_epsilon_sequence(times(2));
  EXPECT_TRUE(t.h_minus1.group().is_trivial());
  EXPECT_EQ(t.h0.group().invariants(), inv(0, {2}));
  EXPECT_TRUE(t.exact);
  EXPECT_TRUE(t.trivial_class);
}

TEST(PiEpsilon, RandomAlwaysExactAndTrivial) {
  Corpus c(29);
  for (int it = 0; it < 60; ++it) {
    PiEpsilonSequence s = pi_epsilon_sequence(c.complex());
    EXPECT_TRUE(s.exact);
    EXPECT_TRUE(s.trivial_class);
  }
}
