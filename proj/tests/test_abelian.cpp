#include "picard/abelian.hpp"
#include "picard/errors.hpp"

#include <gtest/gtest.h>

#include <numeric>
#include <random>

using namespace picard;

namespace {

Invariants inv(std::size_t free_rank, std::vector<long long> factors) {
  Invariants r;
  r.free_rank = free_rank;
  for (long long f : factors) r.factors.emplace_back(f);
  return r;
}

FgAbGroup z(long long n) { return FgAbGroup::cyclic(n); }

IntMatrix random_unimodular(std::mt19937_64& rng, std::size_t n) {
  IntMatrix u = IntMatrix::identity(n);
  if (n < 2) return u;
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  std::uniform_int_distribution<int> coef(-2, 2);
  for (int s = 0; s < 6; ++s) {
    std::size_t i = pick(rng), j = pick(rng);
    if (i == j) continue;
    Integer c = coef(rng);
    for (std::size_t k = 0; k < n; ++k) u(i, k) += c * u(j, k);
  }
  return u;
}

}  // namespace

TEST(Invariants, Examples) {
  EXPECT_EQ(canonical_invariants(FgAbGroup(2, IntMatrix{{2, 0}, {0, 3}})), inv(0, {6}));
  EXPECT_EQ(canonical_invariants(FgAbGroup::free(1)), inv(1, {}));
  EXPECT_EQ(canonical_invariants(FgAbGroup(2, IntMatrix{{2, 0}, {0, 2}})), inv(0, {2, 2}));
  EXPECT_EQ(canonical_invariants(FgAbGroup()), inv(0, {}));
  EXPECT_EQ(inv(1, {2, 6}).to_string(), "Z + Z/2 + Z/6");
}

TEST(Invariants, StableUnderChangeOfBasis) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> e(-6, 6);
  for (int it = 0; it < 100; ++it) {
    std::size_t n = 1 + it % 4, m = it % 5;
    IntMatrix rel(n, m);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < m; ++c) rel(r, c) = e(rng);
    FgAbGroup g(n, rel);
    IntMatrix u = random_unimodular(rng, n);
    IntMatrix v = random_unimodular(rng, m);
    FgAbGroup h(n, u * rel * v);
    EXPECT_EQ(g.invariants(), h.invariants());
    EXPECT_TRUE(is_isomorphic(g, h));
  }
}

TEST(GroupHom, RejectsIllDefined) {
  EXPECT_THROW(GroupHom(z(2), z(3), IntMatrix{{1}}), InputError);
  EXPECT_NO_THROW(GroupHom(z(6), z(3), IntMatrix{{1}}));
  EXPECT_THROW(GroupHom(z(6), z(3), IntMatrix{{1, 0}}), InputError);
}

TEST(GroupHom, EqualityModuloRelations) {
  GroupHom a(z(4), z(4), IntMatrix{{1}});
  GroupHom b(z(4), z(4), IntMatrix{{5}});
  EXPECT_EQ(a, b);
  EXPECT_TRUE((a - b).is_zero());
  EXPECT_FALSE((a + b).is_zero());
  EXPECT_TRUE((Integer(4) * a).is_zero());
}

TEST(GroupElement, Arithmetic) {
  FgAbGroup g = z(5);
  GroupElement x(g, Vector{3});
  EXPECT_EQ(x + x, GroupElement(g, Vector{1}));
  EXPECT_TRUE((Integer(5) * x).is_zero());
}

TEST(Hom, Examples) {
  EXPECT_EQ(hom_group(z(6), z(4)).group().invariants(), inv(0, {2}));
  FgAbGroup b(2, IntMatrix{{3, 0}, {0, 0}});
  EXPECT_EQ(hom_group(FgAbGroup::free(1), b).group().invariants(), b.invariants());
  EXPECT_TRUE(hom_group(z(2), FgAbGroup::free(1)).group().is_trivial());
}

TEST(Hom, LiftAndCoordinates) {
  HomGroup h = hom_group(z(6), z(4));
  GroupHom zero = h.lift(zero_vector(h.group().ambient_rank()));
  EXPECT_TRUE(zero.is_zero());
  GroupHom f(z(6), z(4), IntMatrix{{2}});
  Vector c = h.coordinates(f);
  EXPECT_FALSE(h.group().is_zero_element(c));
  EXPECT_EQ(h.lift(c), f);
}

TEST(Hom, LiftsAreAllDistinctMaps) {
  FgAbGroup a(2, IntMatrix{{2, 0}, {0, 4}});
  FgAbGroup b(2, IntMatrix{{4, 2}, {0, 6}});
  HomGroup h = hom_group(a, b);
  auto elems = enumerate_elements(h.group());
  for (std::size_t x = 0; x < elems.size(); ++x) {
    GroupHom fx = h.lift(elems[x].coords());
    EXPECT_TRUE(h.group().equal_elements(h.coordinates(fx), elems[x].coords()));
    for (std::size_t y = 0; y < x; ++y) EXPECT_FALSE(fx == h.lift(elems[y].coords()));
  }
}

TEST(Ext1, Examples) {
  EXPECT_EQ(ext1_group(z(4), z(6)).invariants(), inv(0, {2}));
  EXPECT_TRUE(ext1_group(FgAbGroup::free(2), z(6)).is_trivial());
  EXPECT_EQ(ext1_group(z(2), z(2)).invariants(), inv(0, {2}));
}

TEST(Ext1, CyclicGcdTable) {
  for (long long n = 2; n <= 30; ++n)
    for (long long m = 2; m <= 30; ++m) {
      long long g = std::gcd(n, m);
      EXPECT_EQ(ext1_group(z(n), z(m)).invariants(), g == 1 ? inv(0, {}) : inv(0, {g})) << n << " " << m;
    }
}

TEST(Ext1, IntoFreeGroup) {
  // Ext(Z/n, Z) = Z/n
  EXPECT_EQ(ext1_group(z(5), FgAbGroup::free(1)).invariants(), inv(0, {5}));
}

TEST(Kernel, Examples) {
  GroupHom twice(FgAbGroup::free(1), FgAbGroup::free(1), IntMatrix{{2}});
  EXPECT_TRUE(kernel(twice).group.is_trivial());
  auto k = kernel(GroupHom::zero(z(4), z(4)));
  EXPECT_EQ(k.group.invariants(), inv(0, {4}));
  EXPECT_TRUE(k.inclusion.is_isomorphism());
  auto r = kernel(GroupHom(z(6), z(3), IntMatrix{{1}}));
  EXPECT_EQ(r.group.invariants(), inv(0, {2}));
  auto gens = enumerate_elements(r.group);
  ASSERT_EQ(gens.size(), 2u);
  EXPECT_TRUE(z(6).equal_elements(r.inclusion.apply(gens[1].coords()), Vector{3}));
}

TEST(Cokernel, Examples) {
  GroupHom twice(FgAbGroup::free(1), FgAbGroup::free(1), IntMatrix{{2}});
  EXPECT_EQ(cokernel(twice).group.invariants(), inv(0, {2}));
  EXPECT_TRUE(cokernel(GroupHom::identity(z(7))).group.is_trivial());
  GroupHom f(FgAbGroup::free(1), FgAbGroup::free(2), IntMatrix{{2}, {4}});
  auto c = cokernel(f);
  EXPECT_EQ(c.group.invariants(), inv(1, {2}));
  EXPECT_TRUE(c.projection.is_surjective());
  EXPECT_TRUE(compose(c.projection, f).is_zero());
}

TEST(Exactness, KernelCokernelRandom) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> e(-4, 4);
  std::uniform_int_distribution<int> ord(0, 6);
  for (int it = 0; it < 80; ++it) {
    FgAbGroup a = FgAbGroup::from_orders({ord(rng), ord(rng)});
    FgAbGroup b = FgAbGroup::from_orders({ord(rng), ord(rng)});
    HomGroup h = hom_group(a, b);
    Vector coords(h.group().ambient_rank());
    for (auto& x : coords) x = e(rng);
    std::optional<GroupHom> f = h.lift(coords);
    auto k = kernel(*f);
    auto c = cokernel(*f);
    EXPECT_TRUE(k.inclusion.is_injective());
    EXPECT_TRUE(compose(*f, k.inclusion).is_zero());
    EXPECT_TRUE(c.projection.is_surjective());
    EXPECT_TRUE(compose(c.projection, *f).is_zero());
    // exactness at a: anything killed by f lies in the image of the inclusion
    auto kk = kernel(*f);
    for (std::size_t col = 0; col < kk.inclusion.matrix().cols(); ++col)
      EXPECT_TRUE(f->target().is_zero_element(f->apply(kk.inclusion.matrix().column(col))));
    // exactness at b: kernel of the projection equals the image of f
    auto kp = kernel(c.projection);
    for (std::size_t col = 0; col < kp.inclusion.matrix().cols(); ++col) {
      Vector y = kp.inclusion.matrix().column(col);
      Lattice img = Lattice::spanned_by(hcat(b.relations(), f->matrix()));
      EXPECT_TRUE(img.contains(y));
    }
  }
}

TEST(Pullback, Examples) {
  auto p0 = pullback_group(GroupHom::zero(z(2), FgAbGroup()), GroupHom::zero(z(3), FgAbGroup()));
  EXPECT_EQ(p0.group.invariants(), inv(0, {6}));
  auto p1 = pullback_group(GroupHom::identity(FgAbGroup::free(1)), GroupHom::identity(FgAbGroup::free(1)));
  EXPECT_EQ(p1.group.invariants(), inv(1, {}));
  GroupHom red(FgAbGroup::free(1), z(2), IntMatrix{{1}});
  auto p2 = pullback_group(red, red);
  EXPECT_EQ(p2.group.invariants(), inv(2, {}));
  EXPECT_EQ(compose(red, p2.pr1), compose(red, p2.pr2));
}

TEST(Pushout, Examples) {
  auto q0 = pushout_group(GroupHom::zero(FgAbGroup(), z(2)), GroupHom::zero(FgAbGroup(), z(2)));
  EXPECT_EQ(q0.group.invariants(), inv(0, {2, 2}));
  auto q1 = pushout_group(GroupHom::identity(FgAbGroup::free(1)), GroupHom::identity(FgAbGroup::free(1)));
  EXPECT_EQ(q1.group.invariants(), inv(1, {}));
  GroupHom twice(FgAbGroup::free(1), FgAbGroup::free(1), IntMatrix{{2}});
  GroupHom red(FgAbGroup::free(1), z(2), IntMatrix{{1}});
  auto q2 = pushout_group(twice, red);
  // (Z + Z/2)/<(2,-1)>: generated by (1,0) of order 4
  EXPECT_EQ(q2.group.invariants(), inv(0, {4}));
  EXPECT_EQ(compose(q2.in1, twice), compose(q2.in2, red));
}

TEST(Enumerate, Examples) {
  EXPECT_EQ(enumerate_elements(z(3)).size(), 3u);
  EXPECT_EQ(enumerate_elements(FgAbGroup()).size(), 1u);
  auto v = enumerate_elements(FgAbGroup::from_orders({2, 2}));
  ASSERT_EQ(v.size(), 4u);
  EXPECT_TRUE(v[0].is_zero());
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) EXPECT_FALSE(v[i] == v[j]);
  EXPECT_THROW(enumerate_elements(FgAbGroup::free(1)), DomainError);
}
