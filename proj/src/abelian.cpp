#include "picard/abelian.hpp"

#include "picard/errors.hpp"

#include <sstream>
#include <utility>

namespace picard {

Integer Invariants::order() const {
  if (!is_finite()) throw DomainError("order of an infinite group");
  Integer n = 1;
  for (const auto& f : factors) n *= f;
  return n;
}

std::string Invariants::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = 0; k < free_rank; ++k) {
    out << (first ? "" : " + ") << "Z";
    first = false;
  }
  for (const auto& f : factors) {
    out << (first ? "" : " + ") << "Z/" << f;
    first = false;
  }
  if (first) out << "0";
  return out.str();
}

FgAbGroup::FgAbGroup() : FgAbGroup(0, IntMatrix(0, 0)) {}

FgAbGroup::FgAbGroup(std::size_t ambient_rank, IntMatrix relations) {
  if (relations.rows() != ambient_rank)
    throw InputError("relation matrix has " + std::to_string(relations.rows()) + " rows, expected " +
                     std::to_string(ambient_rank));
  auto d = std::make_shared<Data>();
  d->ambient = ambient_rank;
  d->relations = std::move(relations);
  d->lattice = Lattice::spanned_by(d->relations);
  for (const auto& f : d->lattice.invariant_factors())
    if (f > 1) d->invariants.factors.push_back(f);
  d->invariants.free_rank = ambient_rank - d->lattice.rank();
  data_ = std::move(d);
}

FgAbGroup FgAbGroup::free(std::size_t rank) { return FgAbGroup(rank, IntMatrix(rank, 0)); }

FgAbGroup FgAbGroup::cyclic(const Integer& order) {
  if (order < 0) throw InputError("negative cyclic order");
  if (order == 0) return free(1);
  IntMatrix r(1, 1);
  r(0, 0) = order;
  return FgAbGroup(1, r);
}

FgAbGroup FgAbGroup::from_orders(const std::vector<long long>& orders) {
  FgAbGroup g;
  for (long long n : orders) g = direct_sum(g, cyclic(n));
  return g;
}

FgAbGroup FgAbGroup::from_invariants(const Invariants& inv) {
  FgAbGroup g;
  for (const auto& f : inv.factors) g = direct_sum(g, cyclic(f));
  return direct_sum(g, free(inv.free_rank));
}

bool operator==(const FgAbGroup& a, const FgAbGroup& b) {
  if (a.data_ == b.data_) return true;
  return a.ambient_rank() == b.ambient_rank() && a.relations() == b.relations();
}

bool is_isomorphic(const FgAbGroup& a, const FgAbGroup& b) { return a.invariants() == b.invariants(); }

FgAbGroup direct_sum(const FgAbGroup& a, const FgAbGroup& b) {
  return FgAbGroup(a.ambient_rank() + b.ambient_rank(), direct_sum(a.relations(), b.relations()));
}

FgAbGroup direct_power(const FgAbGroup& g, std::size_t copies) {
  return FgAbGroup(g.ambient_rank() * copies, repeat_diagonal(g.relations(), copies));
}

Invariants canonical_invariants(const FgAbGroup& g) { return g.invariants(); }

GroupElement::GroupElement(FgAbGroup group, Vector coords) : group_(std::move(group)), coords_(std::move(coords)) {
  if (coords_.size() != group_.ambient_rank()) throw InputError("element has wrong number of coordinates");
}

GroupElement GroupElement::zero(const FgAbGroup& group) { return GroupElement(group, zero_vector(group.ambient_rank())); }

bool operator==(const GroupElement& a, const GroupElement& b) {
  if (!(a.group_ == b.group_)) throw InputError("comparing elements of different groups");
  return a.group_.equal_elements(a.coords_, b.coords_);
}

GroupElement operator+(const GroupElement& a, const GroupElement& b) {
  if (!(a.group_ == b.group_)) throw InputError("adding elements of different groups");
  return GroupElement(a.group_, a.coords_ + b.coords_);
}

GroupElement operator-(const GroupElement& a, const GroupElement& b) {
  if (!(a.group_ == b.group_)) throw InputError("subtracting elements of different groups");
  return GroupElement(a.group_, a.coords_ - b.coords_);
}

GroupElement operator*(const Integer& c, const GroupElement& a) { return GroupElement(a.group_, c * a.coords_); }

GroupHom::GroupHom(FgAbGroup source, FgAbGroup target, IntMatrix matrix)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
  if (matrix_.rows() != target_.ambient_rank() || matrix_.cols() != source_.ambient_rank())
    throw InputError("homomorphism matrix is " + std::to_string(matrix_.rows()) + "x" + std::to_string(matrix_.cols()) +
                     ", expected " + std::to_string(target_.ambient_rank()) + "x" +
                     std::to_string(source_.ambient_rank()));
  if (source_.relations().cols() > 0) {
    IntMatrix images = matrix_ * source_.relations();
    for (std::size_t c = 0; c < images.cols(); ++c) {
      if (!target_.is_zero_element(images.column(c)))
        throw InputError("homomorphism is not well defined: relation " + std::to_string(c) +
                         " is not sent to a relation");
    }
  }
}

GroupHom GroupHom::zero(const FgAbGroup& source, const FgAbGroup& target) {
  return GroupHom(source, target, IntMatrix(target.ambient_rank(), source.ambient_rank()));
}

GroupHom GroupHom::identity(const FgAbGroup& g) { return GroupHom(g, g, IntMatrix::identity(g.ambient_rank())); }

GroupElement GroupHom::operator()(const GroupElement& x) const {
  if (!(x.group() == source_)) throw InputError("applying a homomorphism to an element of another group");
  return GroupElement(target_, apply(x.coords()));
}

bool GroupHom::is_zero() const {
  for (std::size_t c = 0; c < matrix_.cols(); ++c)
    if (!target_.is_zero_element(matrix_.column(c))) return false;
  return true;
}

bool GroupHom::is_injective() const { return kernel(*this).group.is_trivial(); }

bool GroupHom::is_surjective() const {
  Lattice image = Lattice::spanned_by(hcat(target_.relations(), matrix_));
  for (const auto& f : image.invariant_factors())
    if (f != 1) return false;
  return image.rank() == target_.ambient_rank();
}

namespace {

void require_parallel(const GroupHom& f, const GroupHom& g, const char* what) {
  if (!(f.source() == g.source()) || !(f.target() == g.target()))
    throw InputError(std::string(what) + ": homomorphisms have different endpoints");
}

}  // namespace

bool operator==(const GroupHom& f, const GroupHom& g) {
  require_parallel(f, g, "comparison");
  for (std::size_t c = 0; c < f.matrix_.cols(); ++c)
    if (!f.target_.equal_elements(f.matrix_.column(c), g.matrix_.column(c))) return false;
  return true;
}

GroupHom operator+(const GroupHom& f, const GroupHom& g) {
  require_parallel(f, g, "sum");
  return GroupHom(f.source_, f.target_, f.matrix_ + g.matrix_);
}

GroupHom operator-(const GroupHom& f, const GroupHom& g) {
  require_parallel(f, g, "difference");
  return GroupHom(f.source_, f.target_, f.matrix_ - g.matrix_);
}

GroupHom operator-(const GroupHom& f) { return GroupHom(f.source_, f.target_, -f.matrix_); }

GroupHom operator*(const Integer& c, const GroupHom& f) { return GroupHom(f.source_, f.target_, c * f.matrix_); }

GroupHom compose(const GroupHom& g, const GroupHom& f) {
  if (!(f.target() == g.source())) throw InputError("compose: target of the first map is not the source of the second");
  return GroupHom(f.source(), g.target(), g.matrix() * f.matrix());
}

GroupHom direct_sum(const GroupHom& f, const GroupHom& g) {
  return GroupHom(direct_sum(f.source(), g.source()), direct_sum(f.target(), g.target()),
                  direct_sum(f.matrix(), g.matrix()));
}

Subquotient::Subquotient(Lattice top, const IntMatrix& bottom_generators) : top_(std::move(top)) {
  if (bottom_generators.rows() != top_.dimension()) throw InputError("subquotient: dimension mismatch");
  IntMatrix rel(top_.rank(), bottom_generators.cols());
  for (std::size_t c = 0; c < bottom_generators.cols(); ++c) {
    auto coords = top_.coordinates(bottom_generators.column(c));
    if (!coords) throw InvariantViolation("subquotient: a bottom generator lies outside the top lattice");
    rel.set_column(c, *coords);
  }
  group_ = FgAbGroup(top_.rank(), std::move(rel));
}

Vector Subquotient::coordinates(const Vector& v) const {
  auto c = top_.coordinates(v);
  if (!c) throw InputError("vector does not lie in the subgroup");
  return *c;
}

KernelResult kernel(const GroupHom& f) {
  Lattice top = preimage(f.matrix(), f.target().relation_lattice());
  Subquotient sq(top, f.source().relations());
  return {sq.group(), GroupHom(sq.group(), f.source(), top.basis())};
}

CokernelResult cokernel(const GroupHom& f) {
  FgAbGroup c(f.target().ambient_rank(), hcat(f.target().relations(), f.matrix()));
  return {c, GroupHom(f.target(), c, IntMatrix::identity(c.ambient_rank()))};
}

bool is_exact_at(const GroupHom& f, const GroupHom& g) {
  if (!(f.target() == g.source())) throw InputError("exactness: maps do not meet");
  if (!compose(g, f).is_zero()) return false;
  const IntMatrix k = kernel(g).inclusion.matrix();
  Lattice image = Lattice::spanned_by(hcat(f.matrix(), f.target().relations()));
  for (std::size_t c = 0; c < k.cols(); ++c)
    if (!image.contains(k.column(c))) return false;
  return true;
}

PullbackResult pullback_group(const GroupHom& f, const GroupHom& g) {
  if (!(f.target() == g.target())) throw InputError("pullback: maps have different targets");
  const std::size_t na = f.source().ambient_rank();
  const std::size_t nb = g.source().ambient_rank();
  Lattice top = preimage(hcat(f.matrix(), -g.matrix()), f.target().relation_lattice());
  Subquotient sq(top, direct_sum(f.source().relations(), g.source().relations()));
  const IntMatrix& basis = top.basis();
  return {sq.group(), GroupHom(sq.group(), f.source(), basis.select_rows(0, na)),
          GroupHom(sq.group(), g.source(), basis.select_rows(na, nb))};
}

PushoutResult pushout_group(const GroupHom& f, const GroupHom& g) {
  if (!(f.source() == g.source())) throw InputError("pushout: maps have different sources");
  const std::size_t na = f.target().ambient_rank();
  const std::size_t nb = g.target().ambient_rank();
  IntMatrix rel = hcat(direct_sum(f.target().relations(), g.target().relations()), vcat(f.matrix(), -g.matrix()));
  FgAbGroup p(na + nb, std::move(rel));
  IntMatrix in1(na + nb, na);
  in1.set_block(0, 0, IntMatrix::identity(na));
  IntMatrix in2(na + nb, nb);
  in2.set_block(na, 0, IntMatrix::identity(nb));
  return {p, GroupHom(f.target(), p, in1), GroupHom(g.target(), p, in2)};
}

HomGroup::HomGroup(FgAbGroup source, FgAbGroup target) : source_(std::move(source)), target_(std::move(target)) {
  const std::size_t na = source_.ambient_rank();
  const std::size_t nb = target_.ambient_rank();
  const std::size_t ma = source_.relations().cols();
  // vec(A * R_a) = (R_a^T kron I) vec(A) must land in rel(b)^{m_a}
  IntMatrix constraint = kron(source_.relations().transpose(), IntMatrix::identity(nb));
  Lattice top = ma == 0 ? Lattice::full(na * nb) : preimage(constraint, direct_power(target_, ma).relation_lattice());
  classes_ = Subquotient(top, repeat_diagonal(target_.relations(), na));
}

GroupHom HomGroup::lift(const Vector& coords) const {
  if (coords.size() != group().ambient_rank()) throw InputError("Hom element has wrong number of coordinates");
  return GroupHom(source_, target_, unvec(classes_.lift(coords), 0, target_.ambient_rank(), source_.ambient_rank()));
}

Vector HomGroup::coordinates(const GroupHom& f) const {
  if (!(f.source() == source_) || !(f.target() == target_)) throw InputError("homomorphism from another Hom group");
  return classes_.coordinates(vec(f.matrix()));
}

HomGroup hom_group(const FgAbGroup& a, const FgAbGroup& b) { return HomGroup(a, b); }

FgAbGroup ext1_group(const FgAbGroup& a, const FgAbGroup& b) {
  const IntMatrix& w = a.relation_lattice().basis();  // basis of the relation module R
  const std::size_t r = w.cols();
  const std::size_t nb = b.ambient_rank();
  IntMatrix restriction = kron(w.transpose(), IntMatrix::identity(nb));
  return FgAbGroup(nb * r, hcat(repeat_diagonal(b.relations(), r), restriction));
}

std::vector<GroupElement> enumerate_elements(const FgAbGroup& g) {
  if (!g.is_finite()) throw DomainError("cannot enumerate an infinite group");
  const Lattice& lat = g.relation_lattice();
  const Vector& d = lat.invariant_factors();
  std::vector<std::size_t> positions;
  for (std::size_t i = 0; i < d.size(); ++i)
    if (d[i] > 1) positions.push_back(i);
  std::vector<GroupElement> out;
  Vector digits = zero_vector(g.ambient_rank());
  for (;;) {
    out.emplace_back(g, lat.smith_u_inv() * digits);
    std::size_t k = 0;
    for (; k < positions.size(); ++k) {
      auto& x = digits[positions[k]];
      x += 1;
      if (x < d[positions[k]]) break;
      x = 0;
    }
    if (k == positions.size()) break;
  }
  return out;
}

}  // namespace picard
