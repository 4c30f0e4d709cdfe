#include "picard/extensions.hpp"

#include "picard/errors.hpp"

#include <map>
#include <mutex>
#include <utility>

namespace picard {

namespace {

bool is_two_term(const BoundedComplex& k) {
  return k.length() == 0 || (k.lo() >= -1 && k.hi() <= 0);
}

void require_composable(const ChainMap& i, const ChainMap& j) {
  if (!is_two_term(i.source()) || !is_two_term(i.target()) || !is_two_term(j.target()))
    throw InputError("extension terms must be two-term complexes");
  if (presentation_key(i.target()) != presentation_key(j.source()))
    throw InputError("extension maps are not composable");
}

bool degreewise(const ChainMap& f, bool (GroupHom::*test)() const) {
  for (int n : {-1, 0})
    if (!(f.at(n).*test)()) return false;
  return true;
}

ChainMap two_term(const ChainMap& f) {
  return ChainMap(TwoTermComplex::from_bounded(f.source()), TwoTermComplex::from_bounded(f.target()),
                  f.at(-1).matrix(), f.at(0).matrix());
}

Extension validated(const ChainMap& i, const ChainMap& j) {
  try {
    return validate_extension(i, j);
  } catch (const NotAnExtension& e) {
    throw InvariantViolation(std::string("construction produced a non-extension: ") + e.what());
  }
}

}  // namespace

Extension::Extension(ChainMap i, ChainMap j)
    : k_(TwoTermComplex::from_bounded(i.source())),
      l_(TwoTermComplex::from_bounded(i.target())),
      m_(TwoTermComplex::from_bounded(j.target())),
      i_(two_term(i)),
      j_(two_term(j)) {}

ExtensionCheck check_extension(const ChainMap& i0, const ChainMap& j0) {
  require_composable(i0, j0);
  const ChainMap i = two_term(i0), j = two_term(j0);
  ExtensionCheck out;
  out.composite_zero = is_zero(compose(j, i));
  if (!out.composite_zero) {
    out.reason = "j after i is not zero";
    return out;
  }

  std::string reason_a;
  if (!induced_map(j, 0).is_surjective()) {
    reason_a = "H^0(j) is not surjective";
  } else {
    KernelComplex ker = kernel_complex(j);
    if (!is_quasi_isomorphism(lift_to_kernel_complex(ker, j, i)))
      reason_a = "K is not quasi-isomorphic to the kernel complex of j";
  }
  out.condition_a = reason_a.empty();

  std::string reason_b;
  if (!induced_map(i, -1).is_injective()) {
    reason_b = "H^-1(i) is not injective";
  } else {
    CokernelComplex coker = cokernel_complex(i);
    if (!is_quasi_isomorphism(descend_from_cokernel_complex(coker, i, j)))
      reason_b = "the cokernel complex of i is not quasi-isomorphic to M";
  }
  out.condition_b = reason_b.empty();

  if (!reason_a.empty())
    out.reason = reason_a;
  else
    out.reason = reason_b;
  return out;
}

Extension validate_extension(const ChainMap& i, const ChainMap& j) {
  ExtensionCheck c = check_extension(i, j);
  if (!c.composite_zero) throw NotAnExtension(c.reason);
  if (c.condition_a != c.condition_b)
    throw InvariantViolation("extension conditions disagree: " + c.reason);
  if (!c.condition_a) throw NotAnExtension(c.reason);
  return Extension(i, j);
}

ExtClass::ExtClass(std::shared_ptr<const DerivedHomGroup> ambient, Vector coords) : ambient_(std::move(ambient)) {
  if (!ambient_) throw InputError("extension class without an ambient group");
  if (ambient_->degree() != 1) throw InputError("extension classes live in degree 1");
  if (coords.size() != ambient_->group().ambient_rank())
    throw InputError("extension class coordinates have the wrong length");
  coords_ = ambient_->group().reduce(coords);
}

namespace {

void require_same_ambient(const ExtClass& a, const ExtClass& b) {
  if (a.ambient_ptr() == b.ambient_ptr()) return;
  const DerivedHomGroup& x = a.ambient();
  const DerivedHomGroup& y = b.ambient();
  if (presentation_key(x.source()) == presentation_key(y.source()) &&
      presentation_key(x.target()) == presentation_key(y.target()) && x.group() == y.group())
    return;
  throw AmbientMismatch("extension classes belong to different presentations of Ext^1");
}

}  // namespace

bool operator==(const ExtClass& a, const ExtClass& b) {
  require_same_ambient(a, b);
  return a.coords_ == b.coords_;
}

ExtClass operator+(const ExtClass& a, const ExtClass& b) {
  require_same_ambient(a, b);
  return ExtClass(a.ambient_, a.coords_ + b.coords_);
}

ExtClass operator-(const ExtClass& a, const ExtClass& b) {
  require_same_ambient(a, b);
  return ExtClass(a.ambient_, a.coords_ - b.coords_);
}

ExtClass operator*(const Integer& c, const ExtClass& a) {
  Vector v = a.coords_;
  for (auto& x : v) x *= c;
  return ExtClass(a.ambient_, v);
}

std::shared_ptr<const DerivedHomGroup> ext1_ambient(const TwoTermComplex& m, const TwoTermComplex& k) {
  return derived_hom(m, k, 1);
}

ExtClass theta(const Extension& e) {
  auto amb = ext1_ambient(e.m(), e.k());
  Cone cone = mapping_cone(e.j());
  const BoundedComplex& k1 = amb->shifted_target();
  std::vector<GroupHom> phi;
  for (int n : {-2, -1}) {
    IntMatrix m = vcat(IntMatrix(e.m().at(n).ambient_rank(), e.k().at(n + 1).ambient_rank()), e.i().at(n + 1).matrix());
    phi.emplace_back(k1.at(n), cone.complex.at(n), m);
  }
  ChainMap to_cone(k1, cone.complex, std::move(phi));
  ChainMap h = -compose(cone.inclusion, amb->resolution().quasi_iso);
  ChainMap g = lift_along_quasi_isomorphism(to_cone, h);
  return ExtClass(amb, amb->class_of(g));
}

Extension neutral_extension(const TwoTermComplex& m, const TwoTermComplex& k) {
  TwoTermComplex l = direct_sum(k, m);
  auto parts = [](const TwoTermComplex& a, const TwoTermComplex& b, int n) {
    const std::size_t ra = a.at(n).ambient_rank(), rb = b.at(n).ambient_rank();
    IntMatrix in(ra + rb, ra), out(rb, ra + rb);
    in.set_block(0, 0, IntMatrix::identity(ra));
    out.set_block(0, ra, IntMatrix::identity(rb));
    return std::pair{in, out};
  };
  auto [i1, j1] = parts(k, m, -1);
  auto [i0, j0] = parts(k, m, 0);
  return validated(ChainMap(k, l, i1, i0), ChainMap(l, m, j1, j0));
}

Extension pullback_extension(const Extension& e, const ChainMap& f0) {
  if (presentation_key(f0.target()) != presentation_key(e.m()))
    throw InputError("pullback: map does not land in the quotient of the extension");
  const ChainMap f = two_term(f0);
  const TwoTermComplex mp = TwoTermComplex::from_bounded(f.source());
  if (degreewise(e.j(), &GroupHom::is_surjective)) {
    FiberedProduct fp = fibered_product_complex(e.j(), f);
    std::vector<IntMatrix> lifted;
    for (int n : {-1, 0}) {
      IntMatrix top = vcat(fp.pr1.at(n).matrix(), fp.pr2.at(n).matrix());
      const IntMatrix in = e.i().at(n).matrix();
      IntMatrix m(top.cols(), in.cols());
      for (std::size_t c = 0; c < in.cols(); ++c) {
        auto y = solve_linear(top, concat(in.column(c), zero_vector(mp.at(n).ambient_rank())));
        if (!y) throw InvariantViolation("pullback: kernel does not lift into the fibered product");
        m.set_column(c, *y);
      }
      lifted.push_back(std::move(m));
    }
    return validated(ChainMap(e.k(), fp.complex, lifted[0], lifted[1]), fp.pr2);
  }
  TwoTermComplex lm = direct_sum(e.l(), mp);
  ChainMap diff(lm, e.m(), hcat(e.j().at(-1).matrix(), -f.at(-1).matrix()),
                hcat(e.j().at(0).matrix(), -f.at(0).matrix()));
  KernelComplex ker = kernel_complex(diff);
  std::vector<IntMatrix> into, proj;
  for (int n : {-1, 0}) {
    const std::size_t rl = e.l().at(n).ambient_rank(), rm = mp.at(n).ambient_rank();
    into.push_back(vcat(e.i().at(n).matrix(), IntMatrix(rm, e.k().at(n).ambient_rank())));
    IntMatrix p(rm, rl + rm);
    p.set_block(0, rl, IntMatrix::identity(rm));
    proj.push_back(std::move(p));
  }
  ChainMap i = lift_to_kernel_complex(ker, diff, ChainMap(e.k(), lm, into[0], into[1]));
  ChainMap j = compose(ChainMap(lm, mp, proj[0], proj[1]), ker.inclusion);
  return validated(i, j);
}

Extension pushdown_extension(const Extension& e, const ChainMap& g0) {
  if (presentation_key(g0.source()) != presentation_key(e.k()))
    throw InputError("pushdown: map does not start at the kernel of the extension");
  const ChainMap g = two_term(g0);
  const TwoTermComplex kp = TwoTermComplex::from_bounded(g.target());
  auto killing = [&](int n) {
    return hcat(e.j().at(n).matrix(), IntMatrix(e.m().at(n).ambient_rank(), kp.at(n).ambient_rank()));
  };
  if (degreewise(e.i(), &GroupHom::is_injective)) {
    FiberedSum fs = fibered_sum_complex(e.i(), g);
    return validated(fs.in2, ChainMap(fs.complex, e.m(), killing(-1), killing(0)));
  }
  TwoTermComplex lk = direct_sum(e.l(), kp);
  ChainMap diff(e.k(), lk, vcat(e.i().at(-1).matrix(), -g.at(-1).matrix()),
                vcat(e.i().at(0).matrix(), -g.at(0).matrix()));
  CokernelComplex coker = cokernel_complex(diff);
  std::vector<IntMatrix> in2;
  for (int n : {-1, 0}) {
    const std::size_t rl = e.l().at(n).ambient_rank(), rk = kp.at(n).ambient_rank();
    IntMatrix m(rl + rk, rk);
    m.set_block(rl, 0, IntMatrix::identity(rk));
    in2.push_back(std::move(m));
  }
  ChainMap i = compose(coker.projection, ChainMap(kp, lk, in2[0], in2[1]));
  ChainMap j = descend_from_cokernel_complex(coker, diff, ChainMap(lk, e.m(), killing(-1), killing(0)));
  return validated(i, j);
}

Extension product_extension(const Extension& e, const Extension& e2) {
  return validated(direct_sum(e.i(), e2.i()), direct_sum(e.j(), e2.j()));
}

Extension baer_sum(const Extension& e, const Extension& e2) {
  if (presentation_key(e.m()) != presentation_key(e2.m()) || presentation_key(e.k()) != presentation_key(e2.k()))
    throw InputError("Baer sum of extensions with different end terms");
  const TwoTermComplex& m = e.m();
  const TwoTermComplex& k = e.k();
  std::vector<IntMatrix> diag, sum;
  for (int n : {-1, 0}) {
    IntMatrix im = IntMatrix::identity(m.at(n).ambient_rank());
    IntMatrix ik = IntMatrix::identity(k.at(n).ambient_rank());
    diag.push_back(vcat(im, im));
    sum.push_back(hcat(ik, ik));
  }
  Extension prod = product_extension(e, e2);
  Extension pulled = pullback_extension(prod, ChainMap(m, prod.m(), diag[0], diag[1]));
  return pushdown_extension(pulled, ChainMap(prod.k(), k, sum[0], sum[1]));
}

namespace {

struct PsiContext {
  std::shared_ptr<const DerivedHomGroup> ambient;
  Extension cover;
  HomotopyClassGroup classes;
  IntMatrix boundary;
};

std::shared_ptr<const PsiContext> psi_context(const std::shared_ptr<const DerivedHomGroup>& amb) {
  static std::mutex mutex;
  static std::map<std::string, std::shared_ptr<const PsiContext>> cache;
  const std::string key =
      presentation_key(amb->source()) + presentation_key(amb->target()) + to_string(amb->group().relations());
  {
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  const FreeCover& fc = amb->resolution().cover;
  Extension cover = validated(fc.s, fc.p);
  HomotopyClassGroup classes = chain_maps_mod_homotopy(fc.n_complex, amb->target());
  const std::size_t ng = classes.group().ambient_rank();
  IntMatrix boundary(amb->group().ambient_rank(), ng);
  for (std::size_t a = 0; a < ng; ++a) {
    Vector u = zero_vector(ng);
    u[a] = 1;
    ExtClass c = theta(pushdown_extension(cover, classes.representative(u)));
    if (c.ambient_ptr() != amb) c = ExtClass(amb, c.coords());
    boundary.set_column(a, c.coords());
  }
  auto ctx = std::make_shared<const PsiContext>(PsiContext{amb, cover, std::move(classes), std::move(boundary)});
  std::lock_guard<std::mutex> lock(mutex);
  return cache.emplace(key, ctx).first->second;
}

}  // namespace

Extension psi(const ExtClass& x) {
  auto ctx = psi_context(x.ambient_ptr());
  auto y = solve_linear(hcat(ctx->boundary, x.ambient().group().relations()), x.coords());
  if (!y) throw InvariantViolation("connecting map from the cover is not onto Ext^1");
  const std::size_t ng = ctx->classes.group().ambient_rank();
  Vector u(y->begin(), y->begin() + static_cast<std::ptrdiff_t>(ng));
  return pushdown_extension(ctx->cover, ctx->classes.representative(u));
}

bool is_split(const Extension& e) { return theta(e).is_zero(); }

bool are_equivalent(const Extension& e, const Extension& e2) {
  if (presentation_key(e.m()) != presentation_key(e2.m()) || presentation_key(e.k()) != presentation_key(e2.k()))
    throw AmbientMismatch("extensions with different end terms are not comparable");
  return theta(e) == theta(e2);
}

bool LongExactSequence::exact() const {
  for (bool b : exact_at)
    if (!b) return false;
  return true;
}

LongExactSequence long_exact_sequence(const Extension& e) {
  LongExactSequence s;
  s.h1k = pi1(e.k());
  s.h1l = pi1(e.l());
  s.h1m = pi1(e.m());
  s.h0k = pi0(e.k());
  s.h0l = pi0(e.l());
  s.h0m = pi0(e.m());
  s.pi1_i = induced_map(e.i(), -1, s.h1k, s.h1l);
  s.pi1_j = induced_map(e.j(), -1, s.h1l, s.h1m);
  s.pi0_i = induced_map(e.i(), 0, s.h0k, s.h0l);
  s.pi0_j = induced_map(e.j(), 0, s.h0l, s.h0m);

  // H^{-1}(M) -> H^{-1}(MC(j)) <-~- H^{-1}(K[1]) = H^0(K)
  Cone cone = mapping_cone(e.j());
  BoundedComplex k1 = shift(e.k(), 1);
  std::vector<GroupHom> phi;
  for (int n : {-2, -1}) {
    IntMatrix m = vcat(IntMatrix(e.m().at(n).ambient_rank(), e.k().at(n + 1).ambient_rank()), e.i().at(n + 1).matrix());
    phi.emplace_back(k1.at(n), cone.complex.at(n), m);
  }
  ChainMap to_cone(k1, cone.complex, std::move(phi));
  Cohomology hc = cohomology(cone.complex, -1);
  Cohomology hk1 = cohomology(k1, -1);
  IntMatrix a = induced_map(to_cone, -1, hk1, hc).matrix();
  IntMatrix b = induced_map(cone.inclusion, -1, s.h1m, hc).matrix();
  IntMatrix sys = hcat(a, hc.group().relations());
  IntMatrix delta(s.h0k.group().ambient_rank(), b.cols());
  for (std::size_t c = 0; c < b.cols(); ++c) {
    auto y = solve_linear(sys, b.column(c));
    if (!y) throw InvariantViolation("connecting map: cone comparison is not onto");
    delta.set_column(c, Vector(y->begin(), y->begin() + static_cast<std::ptrdiff_t>(a.cols())));
  }
  s.delta = GroupHom(s.h1m.group(), s.h0k.group(), delta);

  s.exact_at[0] = s.pi1_i.is_injective();
  s.exact_at[1] = is_exact_at(s.pi1_i, s.pi1_j);
  s.exact_at[2] = is_exact_at(s.pi1_j, s.delta);
  s.exact_at[3] = is_exact_at(s.delta, s.pi0_i);
  s.exact_at[4] = is_exact_at(s.pi0_i, s.pi0_j);
  s.exact_at[5] = s.pi0_j.is_surjective();
  return s;
}

}  // namespace picard
