#include "picard/corpus.hpp"
#include "picard/errors.hpp"
#include "picard/extensions.hpp"

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
TwoTermComplex in0(const FgAbGroup& g) { return TwoTermComplex::in_degree(g, 0); }
TwoTermComplex in1(const FgAbGroup& g) { return TwoTermComplex::in_degree(g, -1); }

/// Z --2--> Z --> Z/2 in degree 0.
Extension z4_over_z() {
  TwoTermComplex zc = in0(z(0));
  TwoTermComplex m = in0(z(2));
  return validate_extension(ChainMap(zc, zc, IntMatrix(0, 0), IntMatrix{{2}}),
                            ChainMap(zc, m, IntMatrix(0, 0), IntMatrix{{1}}));
}

/// The same sequence pushed down to Z/2: Z/2 -> Z/4 -> Z/2 up to quasi-isomorphism.
Extension z4_over_z2() {
  Extension e = z4_over_z();
  TwoTermComplex k = in0(z(2));
  return pushdown_extension(e, ChainMap(e.k(), k, IntMatrix(0, 0), IntMatrix{{1}}));
}

ExtClass random_class(Corpus& c, const std::shared_ptr<const DerivedHomGroup>& amb) {
  Vector v(amb->group().ambient_rank());
  for (auto& x : v) x = c.uniform(-3, 3);
  return ExtClass(amb, v);
}

struct Pair {
  TwoTermComplex m, k;
};

Pair small_pair(Corpus& c) {
  for (;;) {
    Pair p{c.finite_complex(2, 4, 8), c.finite_complex(2, 4, 8)};
    if (ext1_ambient(p.m, p.k)->group().order() <= 64) return p;
  }
}

}  // namespace

TEST(Validate, Examples) {
  Corpus c(31);
  for (int it = 0; it < 5; ++it) {
    TwoTermComplex m = c.complex(), k = c.complex();
    Extension e = neutral_extension(m, k);
    EXPECT_TRUE(check_extension(e.i(), e.j()).valid());
  }
  EXPECT_NO_THROW(z4_over_z());

  TwoTermComplex k = in0(z(2)), m = in0(z(2));
  TwoTermComplex l = direct_sum(k, m);
  try {
    validate_extension(ChainMap::zero(k, l), ChainMap::zero(l, m));
    FAIL() << "zero maps accepted";
  } catch (const NotAnExtension& e) {
    EXPECT_NE(std::string(e.what()).find("H^0(j)"), std::string::npos);
  }
  ExtensionCheck zero = check_extension(ChainMap::zero(k, l), ChainMap::zero(l, m));
  EXPECT_TRUE(zero.composite_zero);
  EXPECT_FALSE(zero.condition_a);
  EXPECT_FALSE(zero.condition_b);

  TwoTermComplex zc = in0(z(0));
  ChainMap id = ChainMap::identity(zc);
  EXPECT_THROW(validate_extension(id, id), NotAnExtension);
  EXPECT_FALSE(check_extension(id, id).composite_zero);
  EXPECT_THROW(validate_extension(id, ChainMap::identity(m)), InputError);
}

TEST(Validate, DegreewiseShortExactSequences) {
  Corpus c(32);
  for (int it = 0; it < 20; ++it) {
    TwoTermComplex m = c.complex();
    FreeCover fc = free_cover(m);
    EXPECT_TRUE(check_extension(fc.s, fc.p).valid());
  }
}

TEST(Validate, ConditionsAgree) {
  Corpus c(33);
  int valid = 0, invalid = 0;
  for (int it = 0; it < 40; ++it) {
    Pair p = small_pair(c);
    auto amb = ext1_ambient(p.m, p.k);
    Extension e = psi(random_class(c, amb));
    for (int s = 0; s < 3; ++s) {
      ChainMap i = c.coin(20) ? ChainMap::zero(e.k(), e.l()) : e.i();
      ChainMap j = e.j();
      if (c.coin(50)) i = i + i;
      if (c.coin(30)) j = j + j;
      if (c.coin(20)) j = ChainMap::zero(e.l(), e.m());
      ExtensionCheck chk = check_extension(i, j);
      ASSERT_TRUE(chk.composite_zero);
      EXPECT_EQ(chk.condition_a, chk.condition_b) << chk.reason;
      (chk.valid() ? valid : invalid)++;
    }
  }
  EXPECT_GT(valid, 0);
  EXPECT_GT(invalid, 0);
}

TEST(Theta, Examples) {
  Corpus c(34);
  for (int it = 0; it < 10; ++it) {
    TwoTermComplex m = c.complex(), k = c.complex();
    EXPECT_TRUE(theta(neutral_extension(m, k)).is_zero());
    EXPECT_TRUE(is_split(neutral_extension(m, k)));
  }
  Extension e = z4_over_z2();
  ExtClass t = theta(e);
  EXPECT_EQ(t.ambient().group().invariants(), inv(0, {2}));
  EXPECT_FALSE(t.is_zero());
  EXPECT_FALSE(is_split(e));
  EXPECT_TRUE(theta(baer_sum(e, e)) == Integer(2) * t);
  EXPECT_TRUE(theta(baer_sum(e, e)).is_zero());
}

TEST(Theta, AmbientMismatch) {
  Extension e = z4_over_z2();
  Extension other = neutral_extension(in0(z(4)), in0(z(2)));
  EXPECT_THROW((void)(theta(e) == theta(other)), AmbientMismatch);
  EXPECT_THROW((void)(theta(e) + theta(other)), AmbientMismatch);
  EXPECT_THROW(are_equivalent(e, other), AmbientMismatch);
}

TEST(Psi, Examples) {
  TwoTermComplex z2 = in0(z(2));
  auto amb = ext1_ambient(z2, z2);
  ASSERT_EQ(amb->group().order(), 2);
  Extension split = psi(ExtClass(amb, zero_vector(amb->group().ambient_rank())));
  EXPECT_TRUE(are_equivalent(split, neutral_extension(z2, z2)));

  for (const GroupElement& x : enumerate_elements(amb->group())) {
    if (x.is_zero()) continue;
    Extension e = psi(ExtClass(amb, x.coords()));
    EXPECT_EQ(pi0(e.l()).group().invariants(), inv(0, {4}));
    EXPECT_TRUE(pi1(e.l()).group().is_trivial());
    EXPECT_TRUE(are_equivalent(e, z4_over_z2()));
  }
}

TEST(Psi, RoundTrip) {
  Corpus c(35);
  for (int it = 0; it < 12; ++it) {
    Pair p = small_pair(c);
    auto amb = ext1_ambient(p.m, p.k);
    for (const GroupElement& x : enumerate_elements(amb->group())) {
      ExtClass cls(amb, x.coords());
      Extension e = psi(cls);
      EXPECT_TRUE(theta(e) == cls);
      EXPECT_TRUE(are_equivalent(psi(theta(e)), e));
    }
  }
}

TEST(Psi, IndependentOfTheLift) {
  Corpus c(36);
  for (int it = 0; it < 15; ++it) {
    Pair p = small_pair(c);
    FreeCover fc = free_cover(p.m);
    Extension cover = validate_extension(fc.s, fc.p);
    ChainMap u = c.chain_map(fc.n_complex, p.k);
    ChainMap f = c.chain_map(fc.p_complex, p.k);
    Extension e1 = pushdown_extension(cover, u);
    Extension e2 = pushdown_extension(cover, u + compose(f, fc.s));
    EXPECT_TRUE(are_equivalent(e1, e2));
  }
}

TEST(BaerSum, GroupLaw) {
  Corpus c(37);
  for (int it = 0; it < 15; ++it) {
    Pair p = small_pair(c);
    auto amb = ext1_ambient(p.m, p.k);
    ExtClass x = random_class(c, amb), y = random_class(c, amb);
    Extension e = psi(x), f = psi(y);
    EXPECT_TRUE(theta(baer_sum(e, f)) == x + y);
    EXPECT_TRUE(theta(baer_sum(f, e)) == theta(baer_sum(e, f)));
    EXPECT_TRUE(are_equivalent(baer_sum(e, neutral_extension(p.m, p.k)), e));
  }
  Extension n = neutral_extension(in0(z(3)), in1(z(3)));
  EXPECT_TRUE(is_split(baer_sum(n, n)));
  EXPECT_THROW(baer_sum(n, z4_over_z2()), InputError);
}

TEST(Extensions, HomotopyFiberedConstructions) {
  Corpus c(38);
  TwoTermComplex a(z(0), z(0), IntMatrix{{1}});
  for (int it = 0; it < 10; ++it) {
    Pair p = small_pair(c);
    auto amb = ext1_ambient(p.m, p.k);
    ExtClass x = random_class(c, amb);
    Extension e = psi(x);
    const std::size_t m1 = p.m.deg_minus1().ambient_rank(), m0 = p.m.deg0().ambient_rank();
    const std::size_t k1 = p.k.deg_minus1().ambient_rank(), k0 = p.k.deg0().ambient_rank();

    // j = (j, 0) into M + A is not onto A, so the pullback to M goes through the kernel complex
    TwoTermComplex ma = direct_sum(p.m, a);
    Extension wide = validate_extension(
        e.i(), ChainMap(e.l(), ma, vcat(e.j().at(-1).matrix(), IntMatrix(1, e.l().deg_minus1().ambient_rank())),
                        vcat(e.j().at(0).matrix(), IntMatrix(1, e.l().deg0().ambient_rank()))));
    ChainMap incl(p.m, ma, vcat(IntMatrix::identity(m1), IntMatrix(1, m1)), vcat(IntMatrix::identity(m0), IntMatrix(1, m0)));
    EXPECT_TRUE(theta(pullback_extension(wide, incl)) == x);

    // i = (i, 0) from K + A is not injective, so the pushdown to K goes through the cokernel complex
    TwoTermComplex ka = direct_sum(p.k, a);
    Extension fat = validate_extension(
        ChainMap(ka, e.l(), hcat(e.i().at(-1).matrix(), IntMatrix(e.l().deg_minus1().ambient_rank(), 1)),
                 hcat(e.i().at(0).matrix(), IntMatrix(e.l().deg0().ambient_rank(), 1))),
        e.j());
    ChainMap proj(ka, p.k, hcat(IntMatrix::identity(k1), IntMatrix(k1, 1)), hcat(IntMatrix::identity(k0), IntMatrix(k0, 1)));
    Extension down = pushdown_extension(fat, proj);
    EXPECT_TRUE(theta(down) == x);
    EXPECT_TRUE(theta(baer_sum(down, pullback_extension(wide, incl))) == x + x);
  }
}

TEST(Pullback, Naturality) {
  Corpus c(39);
  for (int it = 0; it < 15; ++it) {
    Pair p = small_pair(c);
    TwoTermComplex mp = c.finite_complex(2, 4, 8);
    ChainMap f = c.chain_map(mp, p.m);
    auto amb = ext1_ambient(p.m, p.k);
    auto amb2 = ext1_ambient(mp, p.k);
    ExtClass x = random_class(c, amb);
    Extension e = psi(x);
    GroupHom induced = derived_precompose(*amb, *amb2, f);
    EXPECT_TRUE(theta(pullback_extension(e, f)) == ExtClass(amb2, induced.apply(x.coords())));
    EXPECT_TRUE(is_split(pullback_extension(e, ChainMap::zero(mp, p.m))));
    EXPECT_TRUE(theta(pullback_extension(e, ChainMap::identity(p.m))) == x);
  }
}

TEST(Pushdown, Naturality) {
  Corpus c(40);
  for (int it = 0; it < 15; ++it) {
    Pair p = small_pair(c);
    TwoTermComplex kp = c.finite_complex(2, 4, 8);
    ChainMap g = c.chain_map(p.k, kp);
    auto amb = ext1_ambient(p.m, p.k);
    auto amb2 = ext1_ambient(p.m, kp);
    ExtClass x = random_class(c, amb);
    Extension e = psi(x);
    GroupHom induced = derived_postcompose(*amb, *amb2, g);
    EXPECT_TRUE(theta(pushdown_extension(e, g)) == ExtClass(amb2, induced.apply(x.coords())));
    EXPECT_TRUE(is_split(pushdown_extension(e, ChainMap::zero(p.k, kp))));
    EXPECT_TRUE(theta(pushdown_extension(e, ChainMap::identity(p.k))) == x);
  }
}

TEST(Product, Components) {
  Corpus c(41);
  for (int it = 0; it < 8; ++it) {
    Pair p = small_pair(c), q = small_pair(c);
    ExtClass x = random_class(c, ext1_ambient(p.m, p.k));
    ExtClass y = random_class(c, ext1_ambient(q.m, q.k));
    Extension prod = product_extension(psi(x), psi(y));
    TwoTermComplex mm = direct_sum(p.m, q.m), kk = direct_sum(p.k, q.k);
    auto inj = [](const TwoTermComplex& part, const TwoTermComplex& whole, bool second) {
      std::vector<IntMatrix> ms;
      for (int n : {-1, 0}) {
        const std::size_t r = part.at(n).ambient_rank();
        IntMatrix a(whole.at(n).ambient_rank(), r);
        a.set_block(second ? whole.at(n).ambient_rank() - r : 0, 0, IntMatrix::identity(r));
        ms.push_back(a);
      }
      return ChainMap(part, whole, ms[0], ms[1]);
    };
    auto proj = [&](const TwoTermComplex& whole, const TwoTermComplex& part, bool second) {
      ChainMap in = inj(part, whole, second);
      return ChainMap(whole, part, in.at(-1).matrix().transpose(), in.at(0).matrix().transpose());
    };
    auto component = [&](const TwoTermComplex& m, bool sm, const TwoTermComplex& k, bool sk) {
      return theta(pushdown_extension(pullback_extension(prod, inj(m, mm, sm)), proj(kk, k, sk)));
    };
    EXPECT_TRUE(component(p.m, false, p.k, false) == x);
    EXPECT_TRUE(component(q.m, true, q.k, true) == y);
    EXPECT_TRUE(component(p.m, false, q.k, true).is_zero());
    EXPECT_TRUE(component(q.m, true, p.k, false).is_zero());
  }
  Extension n1 = neutral_extension(in0(z(2)), in1(z(3)));
  Extension n2 = neutral_extension(in1(z(4)), in0(z(0)));
  EXPECT_TRUE(is_split(product_extension(n1, n2)));
}

TEST(Split, VanishingExt) {
  Corpus c(42);
  for (int it = 0; it < 10; ++it) {
    TwoTermComplex k = c.complex();
    TwoTermComplex m = in0(direct_power(z(0), static_cast<std::size_t>(c.uniform(0, 2))));
    ASSERT_TRUE(ext1_ambient(m, k)->group().is_trivial());
    Extension e = psi(random_class(c, ext1_ambient(m, k)));
    EXPECT_TRUE(is_split(e));
  }
}

TEST(ZeroDifferentials, ExtSplitsDegreewise) {
  Corpus c(43);
  for (int it = 0; it < 15; ++it) {
    FgAbGroup m1 = c.group(), m0 = c.group(), k1 = c.group(), k0 = c.group();
    TwoTermComplex m(m1, m0, IntMatrix(m0.ambient_rank(), m1.ambient_rank()));
    TwoTermComplex k(k1, k0, IntMatrix(k0.ambient_rank(), k1.ambient_rank()));
    FgAbGroup expected = direct_sum(direct_sum(ext1_group(m0, k0), ext1_group(m1, k1)), hom_group(m1, k0).group());
    EXPECT_TRUE(is_isomorphic(ext1_ambient(m, k)->group(), expected));
    TwoTermComplex m0c = in0(m0), k0c = in0(k0);
    EXPECT_TRUE(is_isomorphic(ext1_ambient(m0c, k0c)->group(), ext1_group(m0, k0)));
  }
}

TEST(LongExactSequence, Examples) {
  Corpus c(44);
  for (int it = 0; it < 6; ++it) {
    TwoTermComplex m = c.complex(), k = c.complex();
    LongExactSequence s = long_exact_sequence(neutral_extension(m, k));
    EXPECT_TRUE(s.exact());
    EXPECT_TRUE(s.delta.is_zero());
    EXPECT_TRUE(s.pi0_j.is_surjective());
    EXPECT_TRUE(s.pi1_i.is_injective());
  }

  // K = [Z -3-> Z] -> L = [Z -1-> Z] -> M = [Z/3 -> 0]: the snake map is an isomorphism
  TwoTermComplex k = TwoTermComplex(z(0), z(0), IntMatrix{{3}});
  TwoTermComplex l = TwoTermComplex(z(0), z(0), IntMatrix{{1}});
  TwoTermComplex m = in1(z(3));
  Extension e = validate_extension(ChainMap(k, l, IntMatrix{{3}}, IntMatrix{{1}}),
                                   ChainMap(l, m, IntMatrix{{1}}, IntMatrix(0, 1)));
  LongExactSequence s = long_exact_sequence(e);
  EXPECT_TRUE(s.exact());
  EXPECT_TRUE(s.delta.is_isomorphism());

  // K = [Z/2 -> 0] has pi0 = 0
  TwoTermComplex k2 = in1(z(2));
  auto amb = ext1_ambient(in0(z(2)), k2);
  for (const GroupElement& x : enumerate_elements(amb->group())) {
    LongExactSequence t = long_exact_sequence(psi(ExtClass(amb, x.coords())));
    EXPECT_TRUE(t.exact());
    EXPECT_TRUE(t.h0k.group().is_trivial());
  }
}

TEST(LongExactSequence, PsiGenerated) {
  Corpus c(45);
  for (int it = 0; it < 20; ++it) {
    Pair p = small_pair(c);
    LongExactSequence s = long_exact_sequence(psi(random_class(c, ext1_ambient(p.m, p.k))));
    EXPECT_TRUE(s.exact());
  }
}
