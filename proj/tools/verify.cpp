#include "verify.hpp"

#include "picard/corpus.hpp"
#include "picard/errors.hpp"
#include "picard/oracle.hpp"

#include <functional>
#include <numeric>
#include <stdexcept>

namespace picard::verify {

namespace {

constexpr std::size_t kMaxRecorded = 10;

class Checker {
 public:
  explicit Checker(SuiteReport& r) : r_(r) {}

  void expect(bool ok, const std::string& what) {
    ++r_.cases;
    if (!ok) fail(what);
  }

  /// Runs one case body; an exception counts as a failed case.
  void guarded(const std::string& what, const std::function<void()>& body) {
    try {
      body();
    } catch (const std::exception& e) {
      ++r_.cases;
      fail(what + ": " + e.what());
    }
  }

  void count(const std::string& key, std::uint64_t n = 1) { r_.counts[key] += n; }

 private:
  void fail(const std::string& what) {
    ++r_.failures;
    if (r_.failed.size() < kMaxRecorded) r_.failed.push_back(what);
  }

  SuiteReport& r_;
};

std::string tag(const char* what, int index) { return std::string(what) + " #" + std::to_string(index); }

std::uint64_t suite_seed(const Options& opts, std::uint64_t salt) { return opts.seed * 1000003u + salt; }

ExtClass random_class(Corpus& c, const std::shared_ptr<const DerivedHomGroup>& amb) {
  Vector v(amb->group().ambient_rank());
  for (auto& x : v) x = c.uniform(-3, 3);
  return ExtClass(amb, v);
}

struct ExtPair {
  TwoTermComplex m, k;
  std::shared_ptr<const DerivedHomGroup> ambient;
};

/// (m, k) with cohomology of order at most max_cohomology and |Ext^1| at most max_ext,
/// keeping only a fifth of the pairs whose Ext^1 vanishes.
ExtPair ext_pair(Corpus& c, int max_cohomology, long long max_ext) {
  for (;;) {
    TwoTermComplex m = c.finite_complex(2, 4, max_cohomology);
    TwoTermComplex k = c.finite_complex(2, 4, max_cohomology);
    auto amb = ext1_ambient(m, k);
    const Integer order = amb->group().order();
    if (order > max_ext) continue;
    if (order == 1 && !c.coin(20)) continue;
    return {m, k, amb};
  }
}

/// A + B with A = [Z -1-> Z] acyclic, and the inclusion / projection.
ChainMap summand_inclusion(const TwoTermComplex& b, const TwoTermComplex& ab) {
  std::vector<IntMatrix> ms;
  for (int n : {-1, 0}) {
    const std::size_t r = b.at(n).ambient_rank();
    ms.push_back(vcat(IntMatrix::identity(r), IntMatrix(1, r)));
  }
  return ChainMap(b, ab, ms[0], ms[1]);
}

ChainMap summand_projection(const TwoTermComplex& ab, const TwoTermComplex& b) {
  std::vector<IntMatrix> ms;
  for (int n : {-1, 0}) {
    const std::size_t r = b.at(n).ambient_rank();
    ms.push_back(hcat(IntMatrix::identity(r), IntMatrix(r, 1)));
  }
  return ChainMap(ab, b, ms[0], ms[1]);
}

const TwoTermComplex& acyclic_line() {
  static const TwoTermComplex a(FgAbGroup::free(1), FgAbGroup::free(1), IntMatrix{{1}});
  return a;
}

/// e with an acyclic summand appended to M, so that j is not degreewise onto.
Extension widen_quotient(const Extension& e) {
  TwoTermComplex ma = direct_sum(e.m(), acyclic_line());
  ChainMap j(e.l(), ma, vcat(e.j().at(-1).matrix(), IntMatrix(1, e.l().at(-1).ambient_rank())),
             vcat(e.j().at(0).matrix(), IntMatrix(1, e.l().at(0).ambient_rank())));
  return validate_extension(e.i(), j);
}

/// e with an acyclic summand appended to K, so that i is not degreewise into.
Extension widen_kernel(const Extension& e) {
  TwoTermComplex ka = direct_sum(e.k(), acyclic_line());
  ChainMap i(ka, e.l(), hcat(e.i().at(-1).matrix(), IntMatrix(e.l().at(-1).ambient_rank(), 1)),
             hcat(e.i().at(0).matrix(), IntMatrix(e.l().at(0).ambient_rank(), 1)));
  return validate_extension(i, e.j());
}

SuiteReport round_trip(const Options& opts) {
  SuiteReport r;
  r.name = "round_trip";
  Checker ck(r);
  Corpus c(suite_seed(opts, 1));
  for (int p = 0; p < opts.iterations; ++p) {
    ExtPair pair = ext_pair(c, 16, 256);
    ck.count("pairs");
    ck.count("ext_elements", static_cast<std::uint64_t>(pair.ambient->group().order()));
    ck.guarded(tag("round trip pair", p), [&] {
      for (const GroupElement& x : enumerate_elements(pair.ambient->group())) {
        ExtClass cls(pair.ambient, x.coords());
        ck.expect(theta(psi(cls)) == cls, tag("theta(psi(x)) != x, pair", p));
      }
      Extension e = baer_sum(psi(random_class(c, pair.ambient)), psi(random_class(c, pair.ambient)));
      ck.count("psi_generated");
      ck.expect(are_equivalent(psi(theta(e)), e), tag("psi(theta(e)) not equivalent to e, pair", p));
    });
  }
  return r;
}

SuiteReport hom_stack(const Options& opts) {
  SuiteReport r;
  r.name = "hom_stack";
  Checker ck(r);
  Corpus c(suite_seed(opts, 2));
  for (int p = 0; p < opts.iterations; ++p) {
    TwoTermComplex k = c.complex(), l = c.complex();
    ck.count("pairs");
    ck.guarded(tag("hom stack pair", p), [&] {
      TwoTermComplex h = hom_stack_complex(k, l);
      ck.expect(pi0(h).group().invariants() == derived_hom(k, l, 0)->group().invariants(), tag("H^0 mismatch, pair", p));
      ck.expect(pi1(h).group().invariants() == derived_hom(k, l, -1)->group().invariants(), tag("H^-1 mismatch, pair", p));
    });
  }
  return r;
}

SuiteReport baer(const Options& opts) {
  SuiteReport r;
  r.name = "baer_sum";
  Checker ck(r);
  Corpus c(suite_seed(opts, 3));
  for (int p = 0; p < opts.iterations; ++p) {
    ExtPair pair = ext_pair(c, 16, 256);
    ck.count("pairs");
    ck.guarded(tag("Baer sum pair", p), [&] {
      ExtClass x = random_class(c, pair.ambient), y = random_class(c, pair.ambient);
      Extension e = psi(x), f = psi(y);
      Extension neutral = neutral_extension(pair.m, pair.k);
      ck.expect(theta(baer_sum(e, f)) == x + y, tag("theta(e + e') != theta(e) + theta(e'), pair", p));
      ck.expect(theta(neutral).is_zero(), tag("theta(neutral) != 0, pair", p));
      ck.expect(theta(baer_sum(f, e)) == x + y, tag("Baer sum not commutative, pair", p));
      ck.expect(are_equivalent(baer_sum(e, neutral), e), tag("neutral is not a unit, pair", p));
    });
  }
  return r;
}

/// Orders of cyclic p-power factors for every abelian group of order n, one list per group.
std::vector<std::vector<long long>> abelian_groups_of_order(long long n) {
  std::vector<std::vector<long long>> out{{}};
  for (long long p = 2; n > 1; ++p) {
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e == 0) continue;
    std::vector<std::vector<int>> partitions;
    std::function<void(int, int, std::vector<int>&)> gen = [&](int rest, int max, std::vector<int>& cur) {
      if (rest == 0) {
        partitions.push_back(cur);
        return;
      }
      for (int part = std::min(rest, max); part >= 1; --part) {
        cur.push_back(part);
        gen(rest - part, part, cur);
        cur.pop_back();
      }
    };
    std::vector<int> cur;
    gen(e, e, cur);
    std::vector<std::vector<long long>> next;
    for (const auto& base : out)
      for (const auto& part : partitions) {
        auto g = base;
        for (int a : part) {
          long long q = 1;
          for (int t = 0; t < a; ++t) q *= p;
          g.push_back(q);
        }
        next.push_back(g);
      }
    out = std::move(next);
  }
  return out;
}

SuiteReport classification(const Options& opts) {
  SuiteReport r;
  r.name = "classification";
  Checker ck(r);
  Corpus c(suite_seed(opts, 4));
  auto cyclic_case = [&](long long n, long long m) {
    ck.count("cyclic_pairs");
    ck.guarded("Ext(Z/" + std::to_string(n) + ", Z/" + std::to_string(m) + ")", [&] {
      Invariants expected;
      const long long g = std::gcd(n, m);
      if (g > 1) expected.factors.emplace_back(g);
      ck.expect(ext1_group(FgAbGroup::cyclic(n), FgAbGroup::cyclic(m)).invariants() == expected,
                "Ext(Z/" + std::to_string(n) + ", Z/" + std::to_string(m) + ") is not Z/gcd");
    });
  };
  if (opts.exhaustive) {
    for (long long n = 2; n <= 30; ++n)
      for (long long m = 2; m <= 30; ++m) cyclic_case(n, m);
  } else {
    for (int t = 0; t < opts.iterations; ++t) cyclic_case(c.uniform(2, 30), c.uniform(2, 30));
  }

  const long long bound = opts.exhaustive ? 64 : 32;
  std::vector<std::vector<long long>> groups;
  for (long long n = 1; n <= bound; ++n)
    for (auto& g : abelian_groups_of_order(n)) groups.push_back(g);
  auto order = [](const std::vector<long long>& g) {
    return std::accumulate(g.begin(), g.end(), 1LL, std::multiplies<long long>());
  };
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t a = 0; a < groups.size(); ++a)
    for (std::size_t b = 0; b < groups.size(); ++b)
      if (order(groups[a]) * order(groups[b]) <= bound) pairs.emplace_back(a, b);
  std::vector<std::pair<std::size_t, std::size_t>> chosen;
  if (opts.exhaustive) {
    chosen = pairs;
  } else {
    for (int t = 0; t < opts.iterations; ++t)
      chosen.push_back(pairs[static_cast<std::size_t>(c.uniform(0, static_cast<int>(pairs.size()) - 1))]);
  }
  for (const auto& [ai, bi] : chosen) {
    ck.count("factor_set_pairs");
    FgAbGroup a = FgAbGroup::from_orders(groups[ai]), b = FgAbGroup::from_orders(groups[bi]);
    const std::string what = "factor sets for Ext(" + b.invariants().to_string() + ", " + a.invariants().to_string() + ")";
    ck.guarded(what, [&] {
      ck.expect(oracle::ext1_by_factor_sets(b, a).invariants() == ext1_group(b, a).invariants(), what + " disagree");
    });
  }
  return r;
}

SuiteReport splitting(const Options& opts) {
  SuiteReport r;
  r.name = "splitting_formula";
  Checker ck(r);
  Corpus c(suite_seed(opts, 5));
  for (int p = 0; p < opts.iterations; ++p) {
    TwoTermComplex k = c.complex(), l = c.complex();
    ck.count("pairs");
    ck.guarded(tag("splitting formula pair", p), [&] {
      for (int i : {-1, 0, 1})
        ck.expect(is_isomorphic(oracle::splitting_formula_ext(k, l, i), derived_hom(k, l, i)->group()),
                  tag("splitting formula disagrees in degree", i) + ", pair " + std::to_string(p));
    });
  }
  return r;
}

SuiteReport kernel_cokernel(const Options& opts) {
  SuiteReport r;
  r.name = "kernel_cokernel";
  Checker ck(r);
  Corpus c(suite_seed(opts, 6));
  for (int p = 0; p < opts.iterations; ++p) {
    TwoTermComplex k = c.complex(), l = c.complex();
    ChainMap f = c.chain_map(k, l);
    ck.count("maps");
    ck.guarded(tag("kernel/cokernel map", p), [&] {
      KernelComplex ker = kernel_complex(f);
      CokernelComplex cok = cokernel_complex(f);
      Cone cone = mapping_cone(f);
      auto h = [&](const BoundedComplex& x, int n) { return cohomology(x, n).group(); };
      ck.expect(is_isomorphic(h(ker.complex, -1), h(cone.complex, -2)), tag("pi1(ker) != H^-2(MC), map", p));
      ck.expect(is_isomorphic(h(ker.complex, 0), h(cone.complex, -1)), tag("pi0(ker) != H^-1(MC), map", p));
      ck.expect(is_isomorphic(h(cok.complex, -1), h(cone.complex, -1)), tag("pi1(coker) != H^-1(MC), map", p));
      ck.expect(is_isomorphic(h(cok.complex, 0), h(cone.complex, 0)), tag("pi0(coker) != H^0(MC), map", p));
      GroupHom in1 = induced_map(ker.inclusion, -1);
      GroupHom out0 = induced_map(cok.projection, 0);
      ck.expect(in1.is_injective(), tag("pi1(ker) -> pi1(K) not injective, map", p));
      ck.expect(out0.is_surjective(), tag("pi0(L) -> pi0(coker) not surjective, map", p));
      ck.expect(is_exact_at(in1, induced_map(f, -1)), tag("not exact at pi1(K), map", p));
      ck.expect(is_exact_at(induced_map(f, 0), out0), tag("not exact at pi0(L), map", p));
    });
  }
  return r;
}

SuiteReport long_exact(const Options& opts) {
  SuiteReport r;
  r.name = "long_exact_sequence";
  Checker ck(r);
  Corpus c(suite_seed(opts, 7));
  for (int p = 0; p < opts.iterations; ++p) {
    ExtPair pair = ext_pair(c, 16, 256);
    ck.guarded(tag("six-term sequence pair", p), [&] {
      Extension e = psi(random_class(c, pair.ambient));
      TwoTermComplex mp = c.finite_complex(2, 4, 16), kp = c.finite_complex(2, 4, 16);
      std::vector<Extension> corpus{
          e,
          neutral_extension(pair.m, pair.k),
          baer_sum(e, psi(random_class(c, pair.ambient))),
          pullback_extension(e, c.chain_map(mp, pair.m)),
          pushdown_extension(e, c.chain_map(pair.k, kp)),
          widen_quotient(e),
          widen_kernel(e),
      };
      for (std::size_t t = 0; t < corpus.size(); ++t) {
        ck.count("extensions");
        LongExactSequence s = long_exact_sequence(corpus[t]);
        ck.expect(s.exact(), tag("six-term sequence not exact, pair", p) + " variant " + std::to_string(t));
      }
    });
  }
  return r;
}

bool squares_to_zero(const BoundedComplex& k) {
  for (int n = k.lo(); n + 1 < k.hi(); ++n)
    if (!compose(k.d(n + 1), k.d(n)).is_zero()) return false;
  return true;
}

void check_snf(Checker& ck, Corpus& c, int index) {
  const std::size_t rows = static_cast<std::size_t>(c.uniform(1, 6)), cols = static_cast<std::size_t>(c.uniform(1, 6));
  IntMatrix a(rows, cols);
  const bool sparse = c.coin(30);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) a(i, j) = sparse && c.coin(60) ? 0 : c.uniform(-20, 20);
  if (rows > 1 && c.coin(20))
    for (std::size_t j = 0; j < cols; ++j) a(rows - 1, j) = 2 * a(0, j);
  SmithDecomposition d = smith_normal_form(a);
  bool ok = d.u * a * d.v == d.s;
  ok = ok && abs(determinant(d.u)) == 1 && abs(determinant(d.v)) == 1;
  for (std::size_t i = 0; i < rows && ok; ++i)
    for (std::size_t j = 0; j < cols && ok; ++j) {
      if (i != j && d.s(i, j) != 0) ok = false;
      if (i == j && i < d.rank && d.s(i, i) <= 0) ok = false;
      if (i == j && i >= d.rank && d.s(i, i) != 0) ok = false;
    }
  for (std::size_t i = 0; i + 1 < d.rank && ok; ++i)
    if (d.s(i + 1, i + 1) % d.s(i, i) != 0) ok = false;
  ck.expect(ok, tag("Smith normal form contract, matrix", index));
}

SuiteReport structural(const Options& opts) {
  SuiteReport r;
  r.name = "structural";
  Checker ck(r);
  Corpus c(suite_seed(opts, 8));
  const int matrices = std::max(500, opts.iterations * 10);
  for (int t = 0; t < matrices; ++t) {
    ck.count("matrices");
    ck.guarded(tag("Smith normal form matrix", t), [&] { check_snf(ck, c, t); });
  }
  for (int p = 0; p < opts.iterations; ++p) {
    TwoTermComplex k = c.complex(), l = c.complex();
    ChainMap f = c.chain_map(k, l);
    ck.count("complex_cases");
    ck.guarded(tag("constructed complexes, case", p), [&] {
      TwoTermComplex lp = c.complex(), kp = c.complex();
      ChainMap g = c.chain_map(lp, l), h = c.chain_map(k, kp);
      Cone cone = mapping_cone(f);
      Resolution res = free_resolution(k);
      std::vector<BoundedComplex> built{cone.complex,
                                        shift(cone.complex, 1),
                                        truncate(cone.complex, TruncationMode::AtMost, -1).complex,
                                        truncate(cone.complex, TruncationMode::AtLeast, -1).complex,
                                        kernel_complex(f).complex,
                                        cokernel_complex(f).complex,
                                        fibered_product_complex(f, g).complex,
                                        fibered_sum_complex(f, h).complex,
                                        homotopy_fibered_product(f, g).complex,
                                        homotopy_fibered_sum(f, h).complex,
                                        res.complex,
                                        HomComplex(res.complex, l).complex()};
      for (std::size_t t = 0; t < built.size(); ++t) {
        ck.count("complexes");
        ck.expect(squares_to_zero(built[t]), tag("d o d != 0, case", p) + " construction " + std::to_string(t));
      }

      // shift and truncation identities
      for (int i : {-2, -1, 1, 2}) {
        BoundedComplex s = shift(cone.complex, i);
        ck.expect(presentation_key(shift(s, -i)) == presentation_key(cone.complex), tag("shift does not invert, case", p));
        for (int n = s.lo(); n <= s.hi(); ++n)
          ck.expect(is_isomorphic(cohomology(s, n).group(), cohomology(cone.complex, n + i).group()),
                    tag("H^n(K[i]) != H^(n+i)(K), case", p));
      }
      for (int n = cone.complex.lo(); n <= cone.complex.hi(); ++n) {
        Truncation lo = truncate(cone.complex, TruncationMode::AtMost, n);
        Truncation hi = truncate(cone.complex, TruncationMode::AtLeast, n);
        for (int m = cone.complex.lo(); m <= cone.complex.hi(); ++m) {
          if (m <= n) {
            ck.expect(induced_map(lo.map, m).is_isomorphism(), tag("tau<=n changes H^m for m <= n, case", p));
          } else {
            ck.expect(cohomology(lo.complex, m).group().is_trivial(), tag("tau<=n has H^m for m > n, case", p));
          }
          if (m >= n) {
            ck.expect(induced_map(hi.map, m).is_isomorphism(), tag("tau>=n changes H^m for m >= n, case", p));
          } else {
            ck.expect(cohomology(hi.complex, m).group().is_trivial(), tag("tau>=n has H^m for m < n, case", p));
          }
        }
      }

      // universal properties: 0 -> P -> A + B -> C and A -> B + C -> Q -> 0 are exact
      FgAbGroup a = c.group(), b = c.group(), cc = c.group();
      GroupHom ga = c.hom(a, cc), gb = c.hom(b, cc);
      PullbackResult pb = pullback_group(ga, gb);
      GroupHom pairing(pb.group, direct_sum(a, b), vcat(pb.pr1.matrix(), pb.pr2.matrix()));
      GroupHom difference(direct_sum(a, b), cc, hcat(ga.matrix(), -gb.matrix()));
      ck.expect(compose(ga, pb.pr1) == compose(gb, pb.pr2), tag("pullback square does not commute, case", p));
      ck.expect(pairing.is_injective() && is_exact_at(pairing, difference), tag("pullback is not universal, case", p));
      GroupHom fa = c.hom(cc, a), fb = c.hom(cc, b);
      PushoutResult po = pushout_group(fa, fb);
      GroupHom split(cc, direct_sum(a, b), vcat(fa.matrix(), -fb.matrix()));
      GroupHom joined(direct_sum(a, b), po.group, hcat(po.in1.matrix(), po.in2.matrix()));
      ck.expect(compose(po.in1, fa) == compose(po.in2, fb), tag("pushout square does not commute, case", p));
      ck.expect(joined.is_surjective() && is_exact_at(split, joined), tag("pushout is not universal, case", p));

      FiberedProduct fp = fibered_product_complex(f, g);
      ck.expect(compose(f, fp.pr1) == compose(g, fp.pr2), tag("fibered product square does not commute, case", p));
      FiberedSum fs = fibered_sum_complex(f, h);
      ck.expect(compose(fs.in1, f) == compose(fs.in2, h), tag("fibered sum square does not commute, case", p));
    });
  }
  return r;
}

SuiteReport extension_laws(const Options& opts) {
  SuiteReport r;
  r.name = "extension_laws";
  Checker ck(r);
  Corpus c(suite_seed(opts, 9));
  for (int p = 0; p < opts.iterations; ++p) {
    ExtPair pair = ext_pair(c, 16, 256);
    ck.count("pairs");
    ck.guarded(tag("extension laws pair", p), [&] {
      ExtClass x = random_class(c, pair.ambient);
      Extension e = psi(x);

      for (int s = 0; s < 3; ++s) {
        ChainMap i = c.coin(20) ? ChainMap::zero(e.k(), e.l()) : e.i();
        ChainMap j = c.coin(20) ? ChainMap::zero(e.l(), e.m()) : e.j();
        if (c.coin(50)) i = i + i;
        if (c.coin(30)) j = j + j;
        ExtensionCheck chk = check_extension(i, j);
        ck.count("candidates");
        ck.expect(chk.condition_a == chk.condition_b, tag("conditions (a) and (b) disagree, pair", p));
      }

      TwoTermComplex mp = c.finite_complex(2, 4, 16);
      ChainMap f = c.chain_map(mp, pair.m);
      auto amb_m = ext1_ambient(mp, pair.k);
      ck.expect(theta(pullback_extension(e, f)) == ExtClass(amb_m, derived_precompose(*pair.ambient, *amb_m, f).apply(x.coords())),
                tag("pullback is not natural, pair", p));
      TwoTermComplex kp = c.finite_complex(2, 4, 16);
      ChainMap g = c.chain_map(pair.k, kp);
      auto amb_k = ext1_ambient(pair.m, kp);
      ck.expect(theta(pushdown_extension(e, g)) == ExtClass(amb_k, derived_postcompose(*pair.ambient, *amb_k, g).apply(x.coords())),
                tag("pushdown is not natural, pair", p));

      Extension wide = widen_quotient(e), fat = widen_kernel(e);
      ck.expect(theta(pullback_extension(wide, summand_inclusion(pair.m, wide.m()))) == x,
                tag("homotopy fibered product changes the class, pair", p));
      ck.expect(theta(pushdown_extension(fat, summand_projection(fat.k(), pair.k))) == x,
                tag("homotopy fibered sum changes the class, pair", p));

      FreeCover fc = free_cover(pair.m);
      Extension cover = validate_extension(fc.s, fc.p);
      ChainMap u = c.chain_map(fc.n_complex, pair.k);
      ChainMap w = c.chain_map(fc.p_complex, pair.k);
      ck.expect(are_equivalent(pushdown_extension(cover, u), pushdown_extension(cover, u + compose(w, fc.s))),
                tag("lifts differing by f o s give different classes, pair", p));
    });

    FgAbGroup m1 = c.group(), m0 = c.group(), k1 = c.group(), k0 = c.group();
    ck.guarded(tag("zero differentials case", p), [&] {
      TwoTermComplex m(m1, m0, IntMatrix(m0.ambient_rank(), m1.ambient_rank()));
      TwoTermComplex k(k1, k0, IntMatrix(k0.ambient_rank(), k1.ambient_rank()));
      FgAbGroup expected = direct_sum(direct_sum(ext1_group(m0, k0), ext1_group(m1, k1)), hom_group(m1, k0).group());
      ck.expect(is_isomorphic(ext1_ambient(m, k)->group(), expected), tag("zero-differential Ext does not split, case", p));
    });
  }
  return r;
}

using SuiteFn = SuiteReport (*)(const Options&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> suites{
      {"round_trip", round_trip},
      {"hom_stack", hom_stack},
      {"baer_sum", baer},
      {"classification", classification},
      {"splitting_formula", splitting},
      {"kernel_cokernel", kernel_cokernel},
      {"long_exact_sequence", long_exact},
      {"structural", structural},
      {"extension_laws", extension_laws},
  };
  return suites;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : registry()) out.push_back(name);
    return out;
  }();
  return names;
}

SuiteReport run_suite(const std::string& name, const Options& opts) {
  for (const auto& [n, fn] : registry())
    if (n == name) return fn(opts);
  throw std::invalid_argument("unknown suite: " + name);
}

std::vector<SuiteReport> run_all(const Options& opts) {
  std::vector<SuiteReport> out;
  for (const auto& [name, fn] : registry()) out.push_back(fn(opts));
  return out;
}

io::Json to_json(const SuiteReport& r) {
  io::Json counts = io::Json::object();
  for (const auto& [k, v] : r.counts) counts[k] = v;
  return io::Json{{"name", r.name},     {"cases", r.cases},       {"failures", r.failures},
                  {"counts", counts},   {"failed", r.failed},     {"passed", r.passed()}};
}

io::Json report_json(const Options& opts, const std::vector<SuiteReport>& reports) {
  io::Json suites = io::Json::array();
  bool all = true;
  for (const auto& r : reports) {
    suites.push_back(to_json(r));
    all = all && r.passed();
  }
  return io::Json{{"seed", std::to_string(opts.seed)},
                  {"iterations", opts.iterations},
                  {"exhaustive", opts.exhaustive},
                  {"suites", std::move(suites)},
                  {"passed", all}};
}

}  // namespace picard::verify
