#include "picard/derived.hpp"

#include "picard/errors.hpp"

#include <map>
#include <mutex>
#include <utility>

namespace picard {

namespace {

std::size_t rank_at(const BoundedComplex& k, int n) { return k.at(n).ambient_rank(); }

Vector solve_or_throw(const IntMatrix& a, const Vector& b, const char* what) {
  auto x = solve_linear(a, b);
  if (!x) throw InvariantViolation(what);
  return *x;
}

}  // namespace

HomComplex::HomComplex(BoundedComplex p, BoundedComplex c) : p_(std::move(p)), c_(std::move(c)) {
  if (!p_.has_free_components()) throw DomainError("Hom complex source must have free components");
  if (p_.length() == 0 || c_.length() == 0) {
    hom_ = BoundedComplex::zero();
    return;
  }
  const int lo = span_lo(), hi = span_hi();
  std::vector<FgAbGroup> comps;
  for (int n = lo; n <= hi; ++n) {
    IntMatrix rel(0, 0);
    std::size_t ambient = 0;
    for (int a = p_.lo(); a <= p_.hi(); ++a) {
      const std::size_t pa = rank_at(p_, a);
      rel = direct_sum(rel, repeat_diagonal(c_.at(a + n).relations(), pa));
      ambient += rank_at(c_, a + n) * pa;
    }
    comps.emplace_back(ambient, rel);
  }
  std::vector<GroupHom> diffs;
  for (int n = lo; n < hi; ++n) {
    const FgAbGroup& src = comps[static_cast<std::size_t>(n - lo)];
    const FgAbGroup& dst = comps[static_cast<std::size_t>(n + 1 - lo)];
    IntMatrix m(dst.ambient_rank(), src.ambient_rank());
    const Integer sign = (n % 2 == 0) ? Integer(-1) : Integer(1);  // -(-1)^n
    for (int a = p_.lo(); a <= p_.hi(); ++a) {
      const std::size_t pa = rank_at(p_, a);
      const std::size_t row = static_cast<std::size_t>(block_offset(n + 1, a));
      m.set_block(row, static_cast<std::size_t>(block_offset(n, a)), kron(IntMatrix::identity(pa), c_.d(a + n).matrix()));
      if (a < p_.hi()) {
        IntMatrix t = sign * kron(p_.d(a).matrix().transpose(), IntMatrix::identity(rank_at(c_, a + n + 1)));
        m.set_block(row, static_cast<std::size_t>(block_offset(n, a + 1)), t);
      }
    }
    diffs.emplace_back(src, dst, m);
  }
  hom_ = BoundedComplex(lo, std::move(comps), std::move(diffs));
}

int HomComplex::span_lo() const { return c_.lo() - p_.hi(); }
int HomComplex::span_hi() const { return c_.hi() - p_.lo(); }

int HomComplex::block_offset(int n, int a) const {
  std::size_t off = 0;
  for (int b = p_.lo(); b < a; ++b) off += rank_at(c_, b + n) * rank_at(p_, b);
  return static_cast<int>(off);
}

Vector HomComplex::pack(int n, const std::vector<IntMatrix>& blocks) const {
  if (blocks.size() != p_.length()) throw InputError("Hom complex element needs one block per source degree");
  Vector v;
  for (int a = p_.lo(); a <= p_.hi(); ++a) {
    const IntMatrix& b = blocks[static_cast<std::size_t>(a - p_.lo())];
    if (b.rows() != rank_at(c_, a + n) || b.cols() != rank_at(p_, a)) throw InputError("Hom complex block has wrong shape");
    Vector part = vec(b);
    v.insert(v.end(), part.begin(), part.end());
  }
  return v;
}

std::vector<IntMatrix> HomComplex::unpack(int n, const Vector& v) const {
  std::vector<IntMatrix> blocks;
  for (int a = p_.lo(); a <= p_.hi(); ++a)
    blocks.push_back(unvec(v, static_cast<std::size_t>(block_offset(n, a)), rank_at(c_, a + n), rank_at(p_, a)));
  return blocks;
}

Vector HomComplex::pack(const ChainMap& f) const {
  std::vector<IntMatrix> blocks;
  for (int a = p_.lo(); a <= p_.hi(); ++a) blocks.push_back(f.at(a).matrix());
  return pack(0, blocks);
}

ChainMap HomComplex::unpack_chain_map(const Vector& v) const {
  std::vector<IntMatrix> blocks = unpack(0, v);
  std::vector<GroupHom> maps;
  for (int a = p_.lo(); a <= p_.hi(); ++a)
    maps.emplace_back(p_.at(a), c_.at(a), blocks[static_cast<std::size_t>(a - p_.lo())]);
  return ChainMap(p_, c_, std::move(maps));
}

Homotopy HomComplex::unpack_homotopy(const ChainMap& from, const ChainMap& to, const Vector& v) const {
  std::vector<IntMatrix> blocks = unpack(-1, v);
  std::vector<GroupHom> h;
  for (int a = p_.lo(); a <= p_.hi(); ++a)
    h.emplace_back(p_.at(a), c_.at(a - 1), blocks[static_cast<std::size_t>(a - p_.lo())]);
  return Homotopy{from, to, std::move(h)};
}

IntMatrix HomComplex::postcompose_matrix(int n, const ChainMap& phi, const BoundedComplex& c_new) const {
  IntMatrix m(0, 0);
  for (int a = p_.lo(); a <= p_.hi(); ++a) {
    IntMatrix block = kron(IntMatrix::identity(rank_at(p_, a)), phi.at(a + n).matrix());
    if (block.rows() != rank_at(c_new, a + n) * rank_at(p_, a)) throw InputError("postcompose: target mismatch");
    m = direct_sum(m, block);
  }
  return m;
}

HomotopyClassGroup::HomotopyClassGroup(const BoundedComplex& p, const BoundedComplex& l)
    : hom_(p, l), h0_(cohomology(hom_.complex(), 0)) {}

ChainMap HomotopyClassGroup::representative(const Vector& coords) const {
  if (coords.size() != group().ambient_rank()) throw InputError("class has wrong number of coordinates");
  return hom_.unpack_chain_map(h0_.classes.lift(coords));
}

Vector HomotopyClassGroup::class_of(const ChainMap& f) const { return h0_.classes.coordinates(hom_.pack(f)); }

HomotopyClassGroup chain_maps_mod_homotopy(const BoundedComplex& p, const BoundedComplex& l) {
  return HomotopyClassGroup(p, l);
}

std::optional<Homotopy> find_homotopy(const ChainMap& f, const ChainMap& g) {
  HomComplex hc(f.source(), f.target());
  const BoundedComplex& h = hc.complex();
  Vector rhs = hc.pack(g) - hc.pack(f);
  IntMatrix a = hcat(h.d(-1).matrix(), h.at(0).relations());
  auto y = solve_linear(a, rhs);
  if (!y) return std::nullopt;
  Vector hv(y->begin(), y->begin() + static_cast<std::ptrdiff_t>(h.at(-1).ambient_rank()));
  return hc.unpack_homotopy(f, g, hv);
}

ChainMap lift_along_quasi_isomorphism(const ChainMap& phi, const ChainMap& h) {
  HomComplex ha(h.source(), phi.source());
  HomComplex hb(h.source(), phi.target());
  const BoundedComplex& ca = ha.complex();
  const BoundedComplex& cb = hb.complex();
  const IntMatrix big_phi = ha.postcompose_matrix(0, phi, phi.target());
  const IntMatrix d_b = cb.d(-1).matrix();
  const IntMatrix r_b = cb.at(0).relations();
  const IntMatrix d_a = ca.d(0).matrix();
  const IntMatrix r_a = ca.at(1).relations();
  const std::size_t ng = big_phi.cols(), nh = d_b.cols(), nx = r_b.cols(), ny = r_a.cols();
  const std::size_t rows_b = big_phi.rows(), rows_a = d_a.rows();
  IntMatrix sys(rows_b + rows_a, ng + nh + nx + ny);
  sys.set_block(0, 0, big_phi);
  sys.set_block(0, ng, -d_b);
  sys.set_block(0, ng + nh, -r_b);
  sys.set_block(rows_b, 0, d_a);
  sys.set_block(rows_b, ng + nh + nx, -r_a);
  Vector rhs = concat(hb.pack(h), zero_vector(rows_a));
  Vector y = solve_or_throw(sys, rhs, "no lift along a quasi-isomorphism from a free complex");
  return ha.unpack_chain_map(Vector(y.begin(), y.begin() + static_cast<std::ptrdiff_t>(ng)));
}

DerivedHomGroup::DerivedHomGroup(TwoTermComplex k, TwoTermComplex l, int degree, Resolution resolution)
    : k_(std::move(k)),
      l_(std::move(l)),
      degree_(degree),
      resolution_(std::move(resolution)),
      shifted_(shift(l_, degree_)),
      classes_(resolution_.complex, shifted_) {
  const std::size_t n = group().ambient_rank();
  for (std::size_t g = 0; g < n; ++g) {
    Vector e = zero_vector(n);
    e[g] = 1;
    representatives_.push_back(classes_.representative(e));
  }
}

namespace {

std::string cache_key(const TwoTermComplex& k, const TwoTermComplex& l, int i) {
  return presentation_key(k) + presentation_key(l) + std::to_string(i);
}

}  // namespace

std::shared_ptr<const DerivedHomGroup> derived_hom(const TwoTermComplex& k, const TwoTermComplex& l, int i) {
  if (i < -1 || i > 1) throw InputError("derived Hom degree must be -1, 0 or 1");
  static std::mutex mutex;
  static std::map<std::string, std::shared_ptr<const DerivedHomGroup>> cache;
  const std::string key = cache_key(k, l, i);
  {
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  auto group = std::make_shared<const DerivedHomGroup>(k, l, i, free_resolution(k));
  std::lock_guard<std::mutex> lock(mutex);
  return cache.emplace(key, group).first->second;
}

DerivedHomGroup derived_hom(const TwoTermComplex& k, const TwoTermComplex& l, int i, const Resolution& resolution) {
  if (i < -1 || i > 1) throw InputError("derived Hom degree must be -1, 0 or 1");
  return DerivedHomGroup(k, l, i, resolution);
}

GroupHom derived_postcompose(const DerivedHomGroup& from, const DerivedHomGroup& to, const ChainMap& g) {
  if (from.degree() != to.degree()) throw InputError("postcompose: degrees differ");
  ChainMap gs = shift(g, from.degree());
  IntMatrix m(to.group().ambient_rank(), from.group().ambient_rank());
  for (std::size_t c = 0; c < from.representatives().size(); ++c)
    m.set_column(c, to.class_of(compose(gs, from.representatives()[c])));
  return GroupHom(from.group(), to.group(), m);
}

GroupHom derived_precompose(const DerivedHomGroup& from, const DerivedHomGroup& to, const ChainMap& f) {
  if (from.degree() != to.degree()) throw InputError("precompose: degrees differ");
  ChainMap lifted = lift_along_quasi_isomorphism(from.resolution().quasi_iso, compose(f, to.resolution().quasi_iso));
  IntMatrix m(to.group().ambient_rank(), from.group().ambient_rank());
  for (std::size_t c = 0; c < from.representatives().size(); ++c)
    m.set_column(c, to.class_of(compose(from.representatives()[c], lifted)));
  return GroupHom(from.group(), to.group(), m);
}

TwoTermComplex hom_stack_complex(const TwoTermComplex& k, const TwoTermComplex& l) {
  HomComplex hc(free_resolution(k).complex, l);
  return TwoTermComplex::from_bounded(truncate(hc.complex(), TruncationMode::AtMost, 0).complex);
}

PiEpsilonSequence pi_epsilon_sequence(const TwoTermComplex& k) {
  PiEpsilonSequence seq;
  seq.h_minus1 = cohomology(k, -1);
  seq.h0 = cohomology(k, 0);
  const FgAbGroup k1 = k.deg_minus1(), k0 = k.deg0();
  seq.inclusion = GroupHom(seq.h_minus1.group(), k1, seq.h_minus1.classes.top().basis());
  seq.d = k.differential();
  IntMatrix proj(seq.h0.group().ambient_rank(), k0.ambient_rank());
  for (std::size_t c = 0; c < k0.ambient_rank(); ++c) {
    Vector e = zero_vector(k0.ambient_rank());
    e[c] = 1;
    proj.set_column(c, seq.h0.classes.coordinates(e));
  }
  seq.projection = GroupHom(k0, seq.h0.group(), proj);
  seq.exact = seq.inclusion.is_injective() && is_exact_at(seq.inclusion, seq.d) && is_exact_at(seq.d, seq.projection) &&
              seq.projection.is_surjective();

  seq.split_form = TwoTermComplex(GroupHom::zero(seq.h_minus1.group(), seq.h0.group()));
  seq.resolution = free_resolution(k);
  const BoundedComplex& q = seq.resolution.complex;
  const ChainMap& qi = seq.resolution.quasi_iso;
  // retraction of Q^{-1} onto the cycles, which form a direct summand since Q^0 is free
  detail::SmithRequest req;
  req.u = false;
  req.v_inv = true;
  const IntMatrix dq = q.d(-1).matrix();
  detail::SmithTransforms st = detail::smith(dq, req);
  const std::size_t r = st.diagonal.size(), n1 = dq.cols();
  IntMatrix retraction = st.v.select_columns(r, n1 - r) * st.v_inv.select_rows(r, n1 - r);
  IntMatrix cycles = qi.at(-1).matrix() * retraction;
  IntMatrix g1(seq.h_minus1.group().ambient_rank(), n1);
  for (std::size_t c = 0; c < n1; ++c) g1.set_column(c, seq.h_minus1.classes.coordinates(cycles.column(c)));
  IntMatrix g0 = proj * qi.at(0).matrix();
  std::vector<GroupHom> maps{GroupHom::zero(q.at(-2), seq.split_form.at(-2)),
                             GroupHom(q.at(-1), seq.split_form.deg_minus1(), g1),
                             GroupHom(q.at(0), seq.split_form.deg0(), g0)};
  seq.splitting = ChainMap(q, seq.split_form, std::move(maps));
  seq.trivial_class = is_quasi_isomorphism(seq.splitting) && is_quasi_isomorphism(qi);
  return seq;
}

}  // namespace picard
