#include "picard/corpus.hpp"

#include "picard/errors.hpp"

namespace picard {

int Corpus::uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

bool Corpus::coin(int percent) { return uniform(1, 100) <= percent; }

IntMatrix Corpus::unimodular(std::size_t n, int steps) {
  IntMatrix u = IntMatrix::identity(n);
  if (n < 2) return u;
  const int last = static_cast<int>(n) - 1;
  for (int s = 0; s < steps; ++s) {
    std::size_t i = static_cast<std::size_t>(uniform(0, last));
    std::size_t j = static_cast<std::size_t>(uniform(0, last));
    if (i == j) continue;
    Integer c = uniform(-2, 2);
    for (std::size_t k = 0; k < n; ++k) u(i, k) += c * u(j, k);
  }
  return u;
}

FgAbGroup Corpus::group(int max_ambient, int max_order, bool allow_free) {
  const std::size_t n = static_cast<std::size_t>(uniform(0, max_ambient));
  std::vector<Vector> cols;
  for (std::size_t g = 0; g < n; ++g) {
    if (allow_free && coin(25)) continue;
    Vector col = zero_vector(n);
    col[g] = uniform(1, max_order);
    cols.push_back(col);
  }
  IntMatrix rel = IntMatrix::from_columns(n, cols);
  rel = unimodular(n) * rel * unimodular(rel.cols(), 2);
  return FgAbGroup(n, rel);
}

GroupHom Corpus::hom(const FgAbGroup& a, const FgAbGroup& b, int coef) {
  HomGroup h = hom_group(a, b);
  Vector c(h.group().ambient_rank());
  for (auto& x : c) x = uniform(-coef, coef);
  return h.lift(c);
}

TwoTermComplex Corpus::complex(int max_ambient, int max_order, bool allow_free) {
  FgAbGroup a = group(max_ambient, max_order, allow_free);
  FgAbGroup b = group(max_ambient, max_order, allow_free);
  return TwoTermComplex(hom(a, b));
}

TwoTermComplex Corpus::finite_complex(int max_ambient, int max_order, int max_cohomology) {
  for (;;) {
    TwoTermComplex k = complex(max_ambient, max_order, true);
    const FgAbGroup h1 = pi1(k).group();
    const FgAbGroup h0 = pi0(k).group();
    if (!h1.is_finite() || !h0.is_finite()) continue;
    if (h1.order() > max_cohomology || h0.order() > max_cohomology) continue;
    return k;
  }
}

Lattice chain_map_lattice(const TwoTermComplex& k, const TwoTermComplex& l) {
  const FgAbGroup k1 = k.deg_minus1(), k0 = k.deg0(), l1 = l.deg_minus1(), l0 = l.deg0();
  const std::size_t a1 = k1.ambient_rank(), a0 = k0.ambient_rank();
  const std::size_t b1 = l1.ambient_rank(), b0 = l0.ambient_rank();
  const std::size_t n1 = b1 * a1, n0 = b0 * a0;
  // rows: f^{-1} R_{K^{-1}}, f^0 R_{K^0}, d_L f^{-1} - f^0 d_K
  IntMatrix w1 = kron(k1.relations().transpose(), IntMatrix::identity(b1));
  IntMatrix w0 = kron(k0.relations().transpose(), IntMatrix::identity(b0));
  IntMatrix c1 = kron(IntMatrix::identity(a1), l.differential().matrix());
  IntMatrix c0 = -kron(k.differential().matrix().transpose(), IntMatrix::identity(b0));
  IntMatrix a(w1.rows() + w0.rows() + c1.rows(), n1 + n0);
  a.set_block(0, 0, w1);
  a.set_block(w1.rows(), n1, w0);
  a.set_block(w1.rows() + w0.rows(), 0, c1);
  a.set_block(w1.rows() + w0.rows(), n1, c0);
  IntMatrix target = direct_sum(direct_sum(repeat_diagonal(l1.relations(), k1.relations().cols()),
                                           repeat_diagonal(l0.relations(), k0.relations().cols())),
                                repeat_diagonal(l0.relations(), a1));
  return preimage(a, Lattice::spanned_by(target));
}

ChainMap chain_map_from_vector(const TwoTermComplex& k, const TwoTermComplex& l, const Vector& v) {
  const std::size_t a1 = k.deg_minus1().ambient_rank(), a0 = k.deg0().ambient_rank();
  const std::size_t b1 = l.deg_minus1().ambient_rank(), b0 = l.deg0().ambient_rank();
  return ChainMap(k, l, unvec(v, 0, b1, a1), unvec(v, b1 * a1, b0, a0));
}

ChainMap Corpus::chain_map(const TwoTermComplex& k, const TwoTermComplex& l, int coef) {
  Lattice lat = chain_map_lattice(k, l);
  Vector c(lat.rank());
  for (auto& x : c) x = uniform(-coef, coef);
  return chain_map_from_vector(k, l, lat.basis() * c);
}

}  // namespace picard
