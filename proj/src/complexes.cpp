#include "picard/complexes.hpp"

#include "picard/errors.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace picard {

namespace {

Integer sign_of(int i) { return (i % 2 == 0) ? Integer(1) : Integer(-1); }

// Same degreewise data with new (structurally identical) endpoints.
ChainMap rebase(const ChainMap& f, const BoundedComplex& source, const BoundedComplex& target) {
  std::vector<GroupHom> maps;
  for (int n = source.lo(); n <= source.hi(); ++n)
    maps.emplace_back(source.at(n), target.at(n), f.at(n).matrix());
  return ChainMap(source, target, std::move(maps));
}

}  // namespace

BoundedComplex::BoundedComplex(int lo, std::vector<FgAbGroup> components, std::vector<GroupHom> differentials)
    : lo_(lo), components_(std::move(components)), differentials_(std::move(differentials)) {
  const std::size_t expected = components_.empty() ? 0 : components_.size() - 1;
  if (differentials_.size() != expected) throw InputError("complex needs one differential between consecutive components");
  for (std::size_t k = 0; k < differentials_.size(); ++k) {
    if (!(differentials_[k].source() == components_[k]) || !(differentials_[k].target() == components_[k + 1]))
      throw InputError("differential endpoints do not match the components");
  }
  for (std::size_t k = 0; k + 1 < differentials_.size(); ++k) {
    if (!compose(differentials_[k + 1], differentials_[k]).is_zero())
      throw InputError("d o d is not zero in degree " + std::to_string(lo_ + static_cast<int>(k)));
  }
}

BoundedComplex BoundedComplex::concentrated(const FgAbGroup& g, int n) { return BoundedComplex(n, {g}, {}); }

FgAbGroup BoundedComplex::at(int n) const {
  if (!in_range(n)) return FgAbGroup();
  return components_[static_cast<std::size_t>(n - lo_)];
}

GroupHom BoundedComplex::d(int n) const {
  if (n >= lo_ && n < hi()) return differentials_[static_cast<std::size_t>(n - lo_)];
  return GroupHom::zero(at(n), at(n + 1));
}

bool BoundedComplex::has_free_components() const {
  return std::all_of(components_.begin(), components_.end(), [](const FgAbGroup& g) { return g.is_free(); });
}

TwoTermComplex::TwoTermComplex(const GroupHom& d) : BoundedComplex(-1, {d.source(), d.target()}, {d}) {}

TwoTermComplex::TwoTermComplex(const FgAbGroup& minus1, const FgAbGroup& zero, const IntMatrix& d)
    : TwoTermComplex(GroupHom(minus1, zero, d)) {}

TwoTermComplex TwoTermComplex::in_degree(const FgAbGroup& g, int n) {
  if (n == 0) return TwoTermComplex(GroupHom::zero(FgAbGroup(), g));
  if (n == -1) return TwoTermComplex(GroupHom::zero(g, FgAbGroup()));
  throw InputError("two-term complexes live in degrees -1 and 0");
}

TwoTermComplex TwoTermComplex::from_bounded(const BoundedComplex& k) {
  for (int n = k.lo(); n <= k.hi(); ++n) {
    if ((n < -1 || n > 0) && k.at(n).ambient_rank() > 0)
      throw InputError("complex is not supported in degrees -1 and 0");
  }
  return TwoTermComplex(k.d(-1));
}

std::string presentation_key(const BoundedComplex& k) {
  std::ostringstream out;
  out << k.lo() << ':' << k.length() << '{';
  for (int n = k.lo(); n <= k.hi(); ++n) {
    out << k.at(n).ambient_rank() << to_string(k.at(n).relations());
    if (n < k.hi()) out << to_string(k.d(n).matrix());
  }
  out << '}';
  return out.str();
}

TwoTermComplex direct_sum(const TwoTermComplex& a, const TwoTermComplex& b) {
  return TwoTermComplex(direct_sum(a.differential(), b.differential()));
}

BoundedComplex direct_sum(const BoundedComplex& a, const BoundedComplex& b) {
  if (a.length() == 0) return b;
  if (b.length() == 0) return a;
  const int lo = std::min(a.lo(), b.lo());
  const int hi = std::max(a.hi(), b.hi());
  std::vector<FgAbGroup> comps;
  std::vector<GroupHom> diffs;
  for (int n = lo; n <= hi; ++n) {
    comps.push_back(direct_sum(a.at(n), b.at(n)));
    if (n < hi) diffs.push_back(direct_sum(a.d(n), b.d(n)));
  }
  return BoundedComplex(lo, std::move(comps), std::move(diffs));
}

ChainMap::ChainMap(BoundedComplex source, BoundedComplex target, std::vector<GroupHom> maps)
    : source_(std::move(source)), target_(std::move(target)), maps_(std::move(maps)) {
  if (maps_.size() != source_.length()) throw InputError("chain map needs one map per source degree");
  for (int n = source_.lo(); n <= source_.hi(); ++n) {
    const GroupHom& f = maps_[static_cast<std::size_t>(n - source_.lo())];
    if (!(f.source() == source_.at(n)) || !(f.target() == target_.at(n)))
      throw InputError("chain map component in degree " + std::to_string(n) + " has wrong endpoints");
  }
  for (int n = source_.lo(); n <= source_.hi(); ++n) {
    if (!(compose(target_.d(n), at(n)) == compose(at(n + 1), source_.d(n))))
      throw InputError("chain map square does not commute in degree " + std::to_string(n));
  }
}

ChainMap::ChainMap(const TwoTermComplex& source, const TwoTermComplex& target, const IntMatrix& f_minus1,
                   const IntMatrix& f0)
    : ChainMap(source, target,
               {GroupHom(source.deg_minus1(), target.deg_minus1(), f_minus1), GroupHom(source.deg0(), target.deg0(), f0)}) {}

ChainMap ChainMap::zero(const BoundedComplex& source, const BoundedComplex& target) {
  std::vector<GroupHom> maps;
  for (int n = source.lo(); n <= source.hi(); ++n) maps.push_back(GroupHom::zero(source.at(n), target.at(n)));
  return ChainMap(source, target, std::move(maps));
}

ChainMap ChainMap::identity(const BoundedComplex& k) {
  std::vector<GroupHom> maps;
  for (int n = k.lo(); n <= k.hi(); ++n) maps.push_back(GroupHom::identity(k.at(n)));
  return ChainMap(k, k, std::move(maps));
}

GroupHom ChainMap::at(int n) const {
  if (source_.in_range(n)) return maps_[static_cast<std::size_t>(n - source_.lo())];
  return GroupHom::zero(source_.at(n), target_.at(n));
}

namespace {

void require_parallel(const ChainMap& f, const ChainMap& g) {
  const int lo = std::min(f.source().lo(), g.source().lo());
  const int hi = std::max(f.source().hi(), g.source().hi());
  if (f.source().length() != g.source().length() || (f.source().length() > 0 && f.source().lo() != g.source().lo()))
    throw InputError("chain maps have different sources");
  for (int n = lo; n <= hi; ++n) {
    if (!(f.source().at(n) == g.source().at(n)) || !(f.target().at(n) == g.target().at(n)))
      throw InputError("chain maps have different endpoints");
  }
}

template <typename Op>
ChainMap combine(const ChainMap& f, const ChainMap& g, Op op) {
  require_parallel(f, g);
  std::vector<GroupHom> maps;
  for (int n = f.source().lo(); n <= f.source().hi(); ++n) maps.push_back(op(f.at(n), g.at(n)));
  return ChainMap(f.source(), f.target(), std::move(maps));
}

}  // namespace

bool operator==(const ChainMap& f, const ChainMap& g) {
  require_parallel(f, g);
  for (int n = f.source_.lo(); n <= f.source_.hi(); ++n)
    if (!(f.at(n) == g.at(n))) return false;
  return true;
}

ChainMap operator+(const ChainMap& f, const ChainMap& g) {
  return combine(f, g, [](const GroupHom& a, const GroupHom& b) { return a + b; });
}

ChainMap operator-(const ChainMap& f, const ChainMap& g) {
  return combine(f, g, [](const GroupHom& a, const GroupHom& b) { return a - b; });
}

ChainMap operator-(const ChainMap& f) {
  std::vector<GroupHom> maps;
  for (const auto& m : f.maps_) maps.push_back(-m);
  return ChainMap(f.source_, f.target_, std::move(maps));
}

ChainMap compose(const ChainMap& g, const ChainMap& f) {
  std::vector<GroupHom> maps;
  for (int n = f.source().lo(); n <= f.source().hi(); ++n) {
    if (!(f.target().at(n) == g.source().at(n))) throw InputError("compose: chain maps do not meet");
    maps.push_back(compose(g.at(n), f.at(n)));
  }
  return ChainMap(f.source(), g.target(), std::move(maps));
}

ChainMap direct_sum(const ChainMap& f, const ChainMap& g) {
  BoundedComplex s = direct_sum(f.source(), g.source());
  BoundedComplex t = direct_sum(f.target(), g.target());
  std::vector<GroupHom> maps;
  for (int n = s.lo(); n <= s.hi(); ++n) maps.emplace_back(s.at(n), t.at(n), direct_sum(f.at(n).matrix(), g.at(n).matrix()));
  return ChainMap(s, t, std::move(maps));
}

bool is_zero(const ChainMap& f) {
  for (int n = f.source().lo(); n <= f.source().hi(); ++n)
    if (!f.at(n).is_zero()) return false;
  return true;
}

GroupHom Homotopy::at(int n) const {
  const BoundedComplex& s = from.source();
  if (s.in_range(n)) return h[static_cast<std::size_t>(n - s.lo())];
  return GroupHom::zero(s.at(n), from.target().at(n - 1));
}

bool Homotopy::verify() const {
  const BoundedComplex& s = from.source();
  const BoundedComplex& t = from.target();
  if (h.size() != s.length()) return false;
  for (int n = s.lo(); n <= s.hi(); ++n) {
    const GroupHom& hn = h[static_cast<std::size_t>(n - s.lo())];
    if (!(hn.source() == s.at(n)) || !(hn.target() == t.at(n - 1))) return false;
    GroupHom lhs = to.at(n) - from.at(n);
    GroupHom rhs = compose(t.d(n - 1), hn) + compose(at(n + 1), s.d(n));
    if (!(lhs == rhs)) return false;
  }
  return true;
}

Cohomology cohomology(const BoundedComplex& k, int n) {
  Lattice cycles = preimage(k.d(n).matrix(), k.at(n + 1).relation_lattice());
  IntMatrix boundaries = hcat(k.d(n - 1).matrix(), k.at(n).relations());
  return Cohomology{n, Subquotient(std::move(cycles), boundaries)};
}

GroupHom induced_map(const ChainMap& f, int n, const Cohomology& hs, const Cohomology& ht) {
  IntMatrix images = f.at(n).matrix() * hs.classes.top().basis();
  IntMatrix m(ht.group().ambient_rank(), hs.group().ambient_rank());
  for (std::size_t c = 0; c < images.cols(); ++c) m.set_column(c, ht.classes.coordinates(images.column(c)));
  return GroupHom(hs.group(), ht.group(), m);
}

GroupHom induced_map(const ChainMap& f, int n) {
  return induced_map(f, n, cohomology(f.source(), n), cohomology(f.target(), n));
}

bool is_acyclic(const BoundedComplex& k) {
  for (int n = k.lo(); n <= k.hi(); ++n)
    if (!cohomology(k, n).group().is_trivial()) return false;
  return true;
}

bool is_quasi_isomorphism(const ChainMap& f) {
  const BoundedComplex& s = f.source();
  const BoundedComplex& t = f.target();
  int lo = std::min(s.lo(), t.lo());
  int hi = std::max(s.hi(), t.hi());
  if (s.length() == 0) lo = t.lo();
  if (t.length() == 0) {
    if (s.length() == 0) return true;
    lo = std::min(lo, s.lo());
    hi = s.hi();
  }
  for (int n = lo; n <= hi; ++n)
    if (!induced_map(f, n).is_isomorphism()) return false;
  return true;
}

BoundedComplex shift(const BoundedComplex& k, int i) {
  std::vector<FgAbGroup> comps;
  std::vector<GroupHom> diffs;
  const Integer s = sign_of(i);
  for (int n = k.lo(); n <= k.hi(); ++n) {
    comps.push_back(k.at(n));
    if (n < k.hi()) diffs.push_back(s * k.d(n));
  }
  return BoundedComplex(k.lo() - i, std::move(comps), std::move(diffs));
}

ChainMap shift(const ChainMap& f, int i) {
  BoundedComplex s = shift(f.source(), i);
  BoundedComplex t = shift(f.target(), i);
  std::vector<GroupHom> maps;
  for (int n = s.lo(); n <= s.hi(); ++n) maps.push_back(f.at(n + i));
  return ChainMap(s, t, std::move(maps));
}

Truncation truncate(const BoundedComplex& k, TruncationMode mode, int n) {
  if (mode == TruncationMode::AtMost) {
    if (k.length() == 0 || n >= k.hi()) return {k, ChainMap::identity(k), std::nullopt};
    if (n < k.lo()) {
      BoundedComplex z = BoundedComplex::zero(k.lo());
      return {z, ChainMap::zero(z, k), std::nullopt};
    }
    Lattice cycles = preimage(k.d(n).matrix(), k.at(n + 1).relation_lattice());
    Subquotient ker(cycles, k.at(n).relations());
    std::vector<FgAbGroup> comps;
    std::vector<GroupHom> diffs;
    for (int m = k.lo(); m < n; ++m) comps.push_back(k.at(m));
    comps.push_back(ker.group());
    for (int m = k.lo(); m + 1 < n; ++m) diffs.push_back(k.d(m));
    if (n > k.lo()) {
      IntMatrix incoming = k.d(n - 1).matrix();
      IntMatrix lifted(ker.group().ambient_rank(), incoming.cols());
      for (std::size_t c = 0; c < incoming.cols(); ++c) lifted.set_column(c, ker.coordinates(incoming.column(c)));
      diffs.emplace_back(k.at(n - 1), ker.group(), lifted);
    }
    BoundedComplex t(k.lo(), std::move(comps), std::move(diffs));
    std::vector<GroupHom> maps;
    for (int m = k.lo(); m < n; ++m) maps.push_back(GroupHom::identity(k.at(m)));
    maps.emplace_back(ker.group(), k.at(n), cycles.basis());
    ChainMap incl(t, k, std::move(maps));
    return {t, incl, cycles};
  }
  if (k.length() == 0 || n <= k.lo()) return {k, ChainMap::identity(k), std::nullopt};
  if (n > k.hi()) {
    BoundedComplex z = BoundedComplex::zero(n);
    return {z, ChainMap::zero(k, z), std::nullopt};
  }
  FgAbGroup coker(k.at(n).ambient_rank(), hcat(k.at(n).relations(), k.d(n - 1).matrix()));
  std::vector<FgAbGroup> comps{coker};
  std::vector<GroupHom> diffs;
  for (int m = n + 1; m <= k.hi(); ++m) comps.push_back(k.at(m));
  if (n < k.hi()) diffs.emplace_back(coker, k.at(n + 1), k.d(n).matrix());
  for (int m = n + 1; m < k.hi(); ++m) diffs.push_back(k.d(m));
  BoundedComplex t(n, std::move(comps), std::move(diffs));
  std::vector<GroupHom> maps;
  for (int m = k.lo(); m <= k.hi(); ++m) {
    if (m < n) {
      maps.push_back(GroupHom::zero(k.at(m), t.at(m)));
    } else {
      maps.emplace_back(k.at(m), t.at(m), IntMatrix::identity(k.at(m).ambient_rank()));
    }
  }
  return {t, ChainMap(k, t, std::move(maps)), std::nullopt};
}

Cone mapping_cone(const ChainMap& f) {
  const BoundedComplex& k = f.source();
  const BoundedComplex& l = f.target();
  int lo = 0, hi = -1;
  if (l.length() > 0) {
    lo = l.lo();
    hi = l.hi();
  }
  if (k.length() > 0) {
    if (l.length() == 0) {
      lo = k.lo() - 1;
      hi = k.hi() - 1;
    } else {
      lo = std::min(lo, k.lo() - 1);
      hi = std::max(hi, k.hi() - 1);
    }
  }
  std::vector<FgAbGroup> comps;
  std::vector<GroupHom> diffs;
  for (int n = lo; n <= hi; ++n) comps.push_back(direct_sum(l.at(n), k.at(n + 1)));
  for (int n = lo; n < hi; ++n) {
    const std::size_t ln = l.at(n).ambient_rank(), kn = k.at(n + 1).ambient_rank();
    const std::size_t ln1 = l.at(n + 1).ambient_rank(), kn1 = k.at(n + 2).ambient_rank();
    IntMatrix m(ln1 + kn1, ln + kn);
    m.set_block(0, 0, l.d(n).matrix());
    m.set_block(0, ln, f.at(n + 1).matrix());
    m.set_block(ln1, ln, -k.d(n + 1).matrix());
    diffs.emplace_back(comps[static_cast<std::size_t>(n - lo)], comps[static_cast<std::size_t>(n + 1 - lo)], m);
  }
  BoundedComplex mc(lo, std::move(comps), std::move(diffs));

  std::vector<GroupHom> incl;
  for (int n = l.lo(); n <= l.hi(); ++n) {
    IntMatrix m(mc.at(n).ambient_rank(), l.at(n).ambient_rank());
    m.set_block(0, 0, IntMatrix::identity(l.at(n).ambient_rank()));
    incl.emplace_back(l.at(n), mc.at(n), m);
  }
  BoundedComplex k1 = shift(k, 1);
  std::vector<GroupHom> proj;
  for (int n = mc.lo(); n <= mc.hi(); ++n) {
    IntMatrix m(k.at(n + 1).ambient_rank(), mc.at(n).ambient_rank());
    m.set_block(0, l.at(n).ambient_rank(), IntMatrix::identity(k.at(n + 1).ambient_rank()));
    proj.emplace_back(mc.at(n), k1.at(n), m);
  }
  ChainMap inclusion(l, mc, std::move(incl));
  ChainMap projection(mc, k1, std::move(proj));
  return {mc, inclusion, projection};
}

namespace {

void require_two_term(const ChainMap& f) {
  if (f.source().lo() != -1 || f.source().length() != 2 || f.target().lo() != -1 || f.target().length() != 2)
    throw InputError("expected a chain map between two-term complexes");
}

}  // namespace

KernelComplex kernel_complex(const ChainMap& f) {
  require_two_term(f);
  Cone cone = mapping_cone(f);
  BoundedComplex shifted = shift(cone.complex, -1);
  Truncation tr = truncate(shifted, TruncationMode::AtMost, 0);
  TwoTermComplex ker = TwoTermComplex::from_bounded(tr.complex);
  ChainMap to_source = compose(shift(cone.projection, -1), tr.map);
  Lattice cycles = tr.cycles ? *tr.cycles : Lattice::full(shifted.at(0).ambient_rank());
  return {ker, rebase(to_source, ker, f.source()), cycles};
}

CokernelComplex cokernel_complex(const ChainMap& f) {
  require_two_term(f);
  Cone cone = mapping_cone(f);
  Truncation tr = truncate(cone.complex, TruncationMode::AtLeast, -1);
  TwoTermComplex coker = TwoTermComplex::from_bounded(tr.complex);
  ChainMap from_target = compose(tr.map, cone.inclusion);
  return {coker, rebase(from_target, f.target(), coker)};
}

ChainMap lift_to_kernel_complex(const KernelComplex& ker, const ChainMap& f, const ChainMap& h) {
  require_two_term(f);
  const TwoTermComplex& kc = ker.complex;
  const std::size_t t1 = f.target().at(-1).ambient_rank();
  const IntMatrix h0 = h.at(0).matrix();
  IntMatrix lifted(kc.deg0().ambient_rank(), h0.cols());
  for (std::size_t c = 0; c < h0.cols(); ++c) {
    Vector v = concat(zero_vector(t1), h0.column(c));
    auto coords = ker.cycles.coordinates(v);
    if (!coords) throw InputError("map does not compose to zero, cannot lift into the kernel complex");
    lifted.set_column(c, *coords);
  }
  std::vector<GroupHom> maps{GroupHom(h.source().at(-1), kc.deg_minus1(), h.at(-1).matrix()),
                             GroupHom(h.source().at(0), kc.deg0(), lifted)};
  return ChainMap(h.source(), kc, std::move(maps));
}

ChainMap descend_from_cokernel_complex(const CokernelComplex& coker, const ChainMap& f, const ChainMap& h) {
  require_two_term(f);
  const TwoTermComplex& cc = coker.complex;
  const std::size_t s0 = f.source().at(0).ambient_rank();
  IntMatrix m1 = hcat(h.at(-1).matrix(), IntMatrix(h.target().at(-1).ambient_rank(), s0));
  std::vector<GroupHom> maps{GroupHom(cc.deg_minus1(), h.target().at(-1), m1),
                             GroupHom(cc.deg0(), h.target().at(0), h.at(0).matrix())};
  return ChainMap(cc, h.target(), std::move(maps));
}

FiberedProduct fibered_product_complex(const ChainMap& f, const ChainMap& g) {
  require_two_term(f);
  require_two_term(g);
  std::vector<Lattice> tops;
  std::vector<Subquotient> pieces;
  for (int n : {-1, 0}) {
    if (!(f.target().at(n) == g.target().at(n))) throw InputError("fibered product: maps have different targets");
    Lattice top = preimage(hcat(f.at(n).matrix(), -g.at(n).matrix()), f.target().at(n).relation_lattice());
    pieces.emplace_back(top, direct_sum(f.source().at(n).relations(), g.source().at(n).relations()));
    tops.push_back(top);
  }
  IntMatrix dd = direct_sum(f.source().d(-1).matrix(), g.source().d(-1).matrix()) * tops[0].basis();
  IntMatrix d(pieces[1].group().ambient_rank(), dd.cols());
  for (std::size_t c = 0; c < dd.cols(); ++c) d.set_column(c, pieces[1].coordinates(dd.column(c)));
  TwoTermComplex p(pieces[0].group(), pieces[1].group(), d);
  const std::size_t k1 = f.source().at(-1).ambient_rank(), k0 = f.source().at(0).ambient_rank();
  const std::size_t l1 = g.source().at(-1).ambient_rank(), l0 = g.source().at(0).ambient_rank();
  ChainMap pr1(p, TwoTermComplex::from_bounded(f.source()), tops[0].basis().select_rows(0, k1),
               tops[1].basis().select_rows(0, k0));
  ChainMap pr2(p, TwoTermComplex::from_bounded(g.source()), tops[0].basis().select_rows(k1, l1),
               tops[1].basis().select_rows(k0, l0));
  return {p, pr1, pr2};
}

FiberedSum fibered_sum_complex(const ChainMap& f, const ChainMap& g) {
  require_two_term(f);
  require_two_term(g);
  std::vector<PushoutResult> pieces;
  for (int n : {-1, 0}) pieces.push_back(pushout_group(f.at(n), g.at(n)));
  IntMatrix d = direct_sum(f.target().d(-1).matrix(), g.target().d(-1).matrix());
  TwoTermComplex q(pieces[0].group, pieces[1].group, d);
  ChainMap in1(TwoTermComplex::from_bounded(f.target()), q, pieces[0].in1.matrix(), pieces[1].in1.matrix());
  ChainMap in2(TwoTermComplex::from_bounded(g.target()), q, pieces[0].in2.matrix(), pieces[1].in2.matrix());
  return {q, in1, in2};
}

FiberedProduct homotopy_fibered_product(const ChainMap& f, const ChainMap& g) {
  require_two_term(f);
  require_two_term(g);
  TwoTermComplex k = TwoTermComplex::from_bounded(f.source());
  TwoTermComplex l = TwoTermComplex::from_bounded(g.source());
  TwoTermComplex m = TwoTermComplex::from_bounded(f.target());
  TwoTermComplex kl = direct_sum(k, l);
  ChainMap diff(kl, m, hcat(f.at(-1).matrix(), -g.at(-1).matrix()), hcat(f.at(0).matrix(), -g.at(0).matrix()));
  KernelComplex ker = kernel_complex(diff);
  auto proj = [&](const TwoTermComplex& part, std::size_t off1, std::size_t off0) {
    IntMatrix a(part.deg_minus1().ambient_rank(), kl.deg_minus1().ambient_rank());
    a.set_block(0, off1, IntMatrix::identity(part.deg_minus1().ambient_rank()));
    IntMatrix b(part.deg0().ambient_rank(), kl.deg0().ambient_rank());
    b.set_block(0, off0, IntMatrix::identity(part.deg0().ambient_rank()));
    return ChainMap(kl, part, a, b);
  };
  ChainMap p1 = proj(k, 0, 0);
  ChainMap p2 = proj(l, k.deg_minus1().ambient_rank(), k.deg0().ambient_rank());
  return {ker.complex, compose(p1, ker.inclusion), compose(p2, ker.inclusion)};
}

FiberedSum homotopy_fibered_sum(const ChainMap& f, const ChainMap& g) {
  require_two_term(f);
  require_two_term(g);
  TwoTermComplex k = TwoTermComplex::from_bounded(f.target());
  TwoTermComplex l = TwoTermComplex::from_bounded(g.target());
  TwoTermComplex m = TwoTermComplex::from_bounded(f.source());
  TwoTermComplex kl = direct_sum(k, l);
  ChainMap diff(m, kl, vcat(f.at(-1).matrix(), -g.at(-1).matrix()), vcat(f.at(0).matrix(), -g.at(0).matrix()));
  CokernelComplex coker = cokernel_complex(diff);
  auto inj = [&](const TwoTermComplex& part, std::size_t off1, std::size_t off0) {
    IntMatrix a(kl.deg_minus1().ambient_rank(), part.deg_minus1().ambient_rank());
    a.set_block(off1, 0, IntMatrix::identity(part.deg_minus1().ambient_rank()));
    IntMatrix b(kl.deg0().ambient_rank(), part.deg0().ambient_rank());
    b.set_block(off0, 0, IntMatrix::identity(part.deg0().ambient_rank()));
    return ChainMap(part, kl, a, b);
  };
  ChainMap i1 = inj(k, 0, 0);
  ChainMap i2 = inj(l, k.deg_minus1().ambient_rank(), k.deg0().ambient_rank());
  return {coker.complex, compose(coker.projection, i1), compose(coker.projection, i2)};
}

FreeCover free_cover(const TwoTermComplex& m) {
  return free_cover(m, IntMatrix(m.deg_minus1().ambient_rank(), 0), IntMatrix(m.deg0().ambient_rank(), 0));
}

FreeCover free_cover(const TwoTermComplex& m, const IntMatrix& extra_minus1, const IntMatrix& extra0) {
  const FgAbGroup m1 = m.deg_minus1();
  const FgAbGroup m0 = m.deg0();
  if (extra_minus1.rows() != m1.ambient_rank() || extra0.rows() != m0.ambient_rank())
    throw InputError("extra cover generators have the wrong length");
  IntMatrix p1 = hcat(IntMatrix::identity(m1.ambient_rank()), extra_minus1);
  IntMatrix p0 = hcat(hcat(m.differential().matrix() * p1, IntMatrix::identity(m0.ambient_rank())), extra0);
  const std::size_t a = p1.cols(), b = p0.cols() - a;
  FgAbGroup f1 = FgAbGroup::free(a);
  FgAbGroup f0 = FgAbGroup::free(a + b);
  IntMatrix dp(a + b, a);
  dp.set_block(0, 0, IntMatrix::identity(a));
  TwoTermComplex pc(f1, f0, dp);
  ChainMap p(pc, m, p1, p0);

  KernelResult n1 = kernel(p.at(-1));
  KernelResult n0 = kernel(p.at(0));
  IntMatrix dn_amb = dp * n1.inclusion.matrix();
  IntMatrix dn(n0.group.ambient_rank(), dn_amb.cols());
  for (std::size_t c = 0; c < dn_amb.cols(); ++c) {
    auto coords = solve_linear(n0.inclusion.matrix(), dn_amb.column(c));
    if (!coords) throw InvariantViolation("free cover: differential leaves the degree 0 kernel");
    dn.set_column(c, *coords);
  }
  TwoTermComplex nc(n1.group, n0.group, dn);
  ChainMap s(nc, pc, n1.inclusion.matrix(), n0.inclusion.matrix());
  return {pc, nc, p, s};
}

Resolution free_resolution(const TwoTermComplex& m) { return free_resolution(free_cover(m), m); }

Resolution free_resolution(const FreeCover& cover, const TwoTermComplex& m) {
  Cone cone = mapping_cone(cover.s);
  const BoundedComplex& mc = cone.complex;
  std::vector<GroupHom> maps;
  for (int n = mc.lo(); n <= mc.hi(); ++n) {
    IntMatrix q(m.at(n).ambient_rank(), mc.at(n).ambient_rank());
    if (n >= -1) q.set_block(0, 0, cover.p.at(n).matrix());
    maps.emplace_back(mc.at(n), m.at(n), q);
  }
  return {mc, ChainMap(mc, m, std::move(maps)), cover};
}

}  // namespace picard
