#include "picard/oracle.hpp"

#include "picard/errors.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace picard::oracle {

namespace {

std::int64_t to_int64(const Integer& x) {
  if (x > Integer(INT64_MAX / 4) || x < Integer(INT64_MIN / 4)) throw DomainError("entry too large for brute force");
  return static_cast<std::int64_t>(x);
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::vector<std::int64_t> prime_factors(std::int64_t n) {
  std::vector<std::int64_t> ps;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    ps.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) ps.push_back(n);
  return ps;
}

int log_exact(std::int64_t n, std::int64_t p) {
  int e = 0;
  while (n > 1) {
    n /= p;
    ++e;
  }
  return e;
}

std::int64_t power(std::int64_t p, int e) {
  std::int64_t r = 1;
  while (e-- > 0) r *= p;
  return r;
}

}  // namespace

FiniteModel::FiniteModel(const FgAbGroup& g, std::int64_t max_size) {
  const std::size_t n = g.ambient_rank();
  std::vector<std::vector<Integer>> cols;
  const IntMatrix& rel = g.relations();
  for (std::size_t c = 0; c < rel.cols(); ++c) {
    std::vector<Integer> col(n);
    for (std::size_t r = 0; r < n; ++r) col[r] = rel(r, c);
    cols.push_back(std::move(col));
  }
  // column Hermite form, lower triangular with positive diagonal
  for (std::size_t r = 0; r < n; ++r) {
    for (;;) {
      std::size_t best = cols.size();
      for (std::size_t j = r; j < cols.size(); ++j)
        if (cols[j][r] != 0 && (best == cols.size() || abs(cols[j][r]) < abs(cols[best][r]))) best = j;
      if (best == cols.size()) throw DomainError("group is infinite");
      std::swap(cols[r], cols[best]);
      bool done = true;
      for (std::size_t j = r + 1; j < cols.size(); ++j) {
        if (cols[j][r] == 0) continue;
        Integer q = cols[j][r] / cols[r][r];
        for (std::size_t i = 0; i < n; ++i) cols[j][i] -= q * cols[r][i];
        if (cols[j][r] != 0) done = false;
      }
      if (done) break;
    }
    if (cols[r][r] < 0)
      for (auto& x : cols[r]) x = -x;
    for (std::size_t c = 0; c < r; ++c) {
      Integer q = cols[c][r] / cols[r][r];
      if (cols[c][r] - q * cols[r][r] < 0) q -= 1;
      for (std::size_t i = 0; i < n; ++i) cols[c][i] -= q * cols[r][i];
    }
  }
  hnf_.assign(n, std::vector<std::int64_t>(n));
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t r = 0; r < n; ++r) hnf_[c][r] = to_int64(cols[c][r]);
  for (std::size_t r = 0; r < n; ++r) {
    radix_.push_back(hnf_[r][r]);
    size_ *= hnf_[r][r];
    if (size_ > max_size) throw DomainError("group too large for brute force");
  }
}

std::vector<std::int64_t> FiniteModel::reduce(std::vector<std::int64_t> v) const {
  for (std::size_t r = 0; r < v.size(); ++r) {
    std::int64_t q = floor_div(v[r], radix_[r]);
    if (q == 0) continue;
    for (std::size_t i = r; i < v.size(); ++i) v[i] -= q * hnf_[r][i];
  }
  return v;
}

std::int64_t FiniteModel::index_of(const Vector& x) const {
  if (x.size() != radix_.size()) throw InputError("element has the wrong length");
  std::vector<std::int64_t> v;
  for (const auto& e : x) v.push_back(to_int64(e));
  v = reduce(std::move(v));
  std::int64_t idx = 0;
  for (std::size_t r = v.size(); r-- > 0;) idx = idx * radix_[r] + v[r];
  return idx;
}

std::vector<std::int64_t> FiniteModel::element(std::int64_t index) const {
  std::vector<std::int64_t> v(radix_.size());
  for (std::size_t r = 0; r < v.size(); ++r) {
    v[r] = index % radix_[r];
    index /= radix_[r];
  }
  return v;
}

namespace {

std::int64_t encode(const std::vector<std::int64_t>& v, const std::vector<std::int64_t>& radix) {
  std::int64_t idx = 0;
  for (std::size_t r = v.size(); r-- > 0;) idx = idx * radix[r] + v[r];
  return idx;
}

}  // namespace

std::int64_t FiniteModel::add(std::int64_t a, std::int64_t b) const {
  std::vector<std::int64_t> x = element(a), y = element(b);
  for (std::size_t r = 0; r < x.size(); ++r) x[r] += y[r];
  return encode(reduce(std::move(x)), radix_);
}

std::int64_t FiniteModel::negate(std::int64_t a) const { return multiple(a, -1); }

std::int64_t FiniteModel::multiple(std::int64_t a, std::int64_t c) const {
  std::vector<std::int64_t> x = element(a);
  for (auto& e : x) e *= c;
  return encode(reduce(std::move(x)), radix_);
}

bool FactorSet::is_normalized() const {
  FiniteModel b(base);
  const std::int64_t n = b.size();
  for (std::int64_t x = 0; x < n; ++x)
    if (table[static_cast<std::size_t>(x)] != 0 || table[static_cast<std::size_t>(x * n)] != 0) return false;
  return true;
}

bool FactorSet::is_symmetric() const {
  FiniteModel b(base);
  const std::int64_t n = b.size();
  for (std::int64_t x = 0; x < n; ++x)
    for (std::int64_t y = 0; y < x; ++y)
      if (table[static_cast<std::size_t>(x * n + y)] != table[static_cast<std::size_t>(y * n + x)]) return false;
  return true;
}

bool FactorSet::is_cocycle() const {
  FiniteModel b(base), a(fiber);
  const std::int64_t n = b.size();
  if (table.size() != static_cast<std::size_t>(n * n)) return false;
  auto f = [&](std::int64_t x, std::int64_t y) { return table[static_cast<std::size_t>(x * n + y)]; };
  for (std::int64_t x = 0; x < n; ++x)
    for (std::int64_t y = 0; y < n; ++y)
      for (std::int64_t z = 0; z < n; ++z) {
        std::int64_t lhs = a.add(f(x, y), f(b.add(x, y), z));
        std::int64_t rhs = a.add(f(y, z), f(x, b.add(y, z)));
        if (lhs != rhs) return false;
      }
  return true;
}

std::uint64_t brute_force_hom_count(const FgAbGroup& a, const FgAbGroup& b) {
  FiniteModel mb(b);
  const std::size_t n = a.ambient_rank();
  double tuples = 1;
  for (std::size_t g = 0; g < n; ++g) tuples *= static_cast<double>(mb.size());
  if (tuples > 1e7) throw DomainError("hom count: too many generator images to enumerate");

  std::vector<std::vector<std::int64_t>> rels;
  for (std::size_t c = 0; c < a.relations().cols(); ++c) {
    std::vector<std::int64_t> col(n);
    for (std::size_t r = 0; r < n; ++r) col[r] = to_int64(a.relations()(r, c));
    rels.push_back(std::move(col));
  }
  std::vector<std::int64_t> images(n, 0);
  std::uint64_t count = 0;
  for (;;) {
    bool ok = true;
    for (const auto& rel : rels) {
      std::int64_t s = 0;
      for (std::size_t g = 0; g < n && ok; ++g)
        if (rel[g] != 0) s = mb.add(s, mb.multiple(images[g], rel[g]));
      if (s != 0) {
        ok = false;
        break;
      }
    }
    if (ok) ++count;
    std::size_t g = 0;
    while (g < n && ++images[g] == mb.size()) images[g++] = 0;
    if (g == n) break;
  }
  return count;
}

Invariants invariants_by_counting(const FgAbGroup& g) {
  FiniteModel m(g);
  std::map<std::int64_t, std::vector<std::int64_t>> powers;  // prime -> cyclic p-power orders
  for (std::int64_t p : prime_factors(m.size())) {
    const int e = log_exact([&] {
      std::int64_t s = m.size(), r = 1;
      while (s % p == 0) {
        s /= p;
        r *= p;
      }
      return r;
    }(), p);
    // c[i] = log_p #{x : p^i x = 0}
    std::vector<int> c(static_cast<std::size_t>(e) + 2, 0);
    for (int i = 1; i <= e + 1; ++i) {
      std::int64_t killed = 0;
      const std::int64_t pi = power(p, i);
      for (std::int64_t x = 0; x < m.size(); ++x)
        if (m.multiple(x, pi) == 0) ++killed;
      std::int64_t t = killed;
      while (t % p == 0 && t > 1) t /= p;
      if (t != 1) throw InvariantViolation("p-torsion count is not a power of p");
      c[static_cast<std::size_t>(i)] = log_exact(killed, p);
    }
    // at least s: c[s] - c[s-1]
    for (int s = 1; s <= e; ++s) {
      int at_least = c[static_cast<std::size_t>(s)] - c[static_cast<std::size_t>(s - 1)];
      int above = c[static_cast<std::size_t>(s + 1)] - c[static_cast<std::size_t>(s)];
      for (int k = 0; k < at_least - above; ++k) powers[p].push_back(power(p, s));
    }
  }
  std::size_t count = 0;
  for (auto& [p, list] : powers) {
    std::sort(list.rbegin(), list.rend());
    count = std::max(count, list.size());
  }
  std::vector<std::int64_t> factors(count, 1);
  for (auto& [p, list] : powers)
    for (std::size_t i = 0; i < list.size(); ++i) factors[i] *= list[i];
  Invariants inv;
  for (auto it = factors.rbegin(); it != factors.rend(); ++it) inv.factors.emplace_back(*it);
  return inv;
}

namespace {

using Row = std::vector<std::int32_t>;

struct LocalRing {
  std::int32_t p, k, q;

  int valuation(std::int32_t x) const {
    int v = 0;
    while (x % p == 0) {
      x /= p;
      ++v;
    }
    return v;
  }
  std::int32_t inverse(std::int32_t u) const {
    for (std::int32_t x = 1; x < q; ++x)
      if ((static_cast<std::int64_t>(u) * x) % q == 1) return x;
    throw InvariantViolation("not a unit");
  }
};

struct Elimination {
  std::vector<int> pivot_cols;
  std::vector<int> pivot_vals;
};

/// Diagonalizes `rows` (entries in [0, q)) over Z/q with q = p^k by minimal-valuation
/// pivoting. Column operations are mirrored on `right` when given (columns stored as rows).
Elimination local_eliminate(const LocalRing& ring, std::vector<Row> rows, std::size_t ncols, std::vector<Row>* right) {
  Elimination out;
  std::vector<bool> col_active(ncols, true);
  std::vector<std::size_t> live;
  for (std::size_t i = 0; i < rows.size(); ++i) live.push_back(i);
  for (;;) {
    int best_v = ring.k;
    std::size_t bi = 0, bj = 0;
    for (std::size_t i : live) {
      const Row& r = rows[i];
      for (std::size_t j = 0; j < ncols; ++j) {
        if (r[j] == 0 || !col_active[j]) continue;
        int v = ring.valuation(r[j]);
        if (v < best_v) {
          best_v = v;
          bi = i;
          bj = j;
          if (v == 0) break;
        }
      }
      if (best_v == 0) break;
    }
    if (best_v == ring.k) break;

    const Row piv = rows[bi];
    const std::int32_t scale = static_cast<std::int32_t>(power(ring.p, best_v));
    const std::int32_t uinv = ring.inverse(piv[bj] / scale);
    std::vector<std::size_t> nz;
    for (std::size_t j = 0; j < ncols; ++j)
      if (piv[j] != 0 && col_active[j]) nz.push_back(j);

    std::vector<std::size_t> next;
    for (std::size_t i : live) {
      if (i == bi) continue;
      Row& r = rows[i];
      if (r[bj] != 0) {
        const std::int64_t f = (static_cast<std::int64_t>(r[bj] / scale) * uinv) % ring.q;
        for (std::size_t j : nz) r[j] = static_cast<std::int32_t>(((r[j] - f * piv[j]) % ring.q + ring.q) % ring.q);
      }
      bool zero = true;
      for (std::size_t j = 0; j < ncols && zero; ++j)
        if (r[j] != 0 && col_active[j] && j != bj) zero = false;
      if (!zero) next.push_back(i);
    }
    if (right) {
      Row& rc = (*right)[bj];
      for (std::size_t j : nz) {
        if (j == bj) continue;
        const std::int64_t f = (static_cast<std::int64_t>(piv[j] / scale) * uinv) % ring.q;
        Row& target = (*right)[j];
        for (std::size_t t = 0; t < target.size(); ++t)
          target[t] = static_cast<std::int32_t>(((target[t] - f * rc[t]) % ring.q + ring.q) % ring.q);
      }
    }
    col_active[bj] = false;
    out.pivot_cols.push_back(static_cast<int>(bj));
    out.pivot_vals.push_back(best_v);
    live = std::move(next);
  }
  return out;
}

/// log_p of the order of the submodule of (Z/q)^n generated by `gens`.
int generated_log_order(const LocalRing& ring, const std::vector<Row>& gens, std::size_t n) {
  Elimination e = local_eliminate(ring, gens, n, nullptr);
  int total = 0;
  for (int v : e.pivot_vals) total += ring.k - v;
  return total;
}

struct CocycleSystem {
  std::size_t unknowns = 0;
  std::vector<std::map<std::size_t, int>> equations;
  std::vector<std::map<std::size_t, int>> coboundaries;
};

CocycleSystem cocycle_system(const FiniteModel& b) {
  const std::int64_t n = b.size();
  std::vector<std::vector<std::int64_t>> sum(static_cast<std::size_t>(n), std::vector<std::int64_t>(static_cast<std::size_t>(n)));
  for (std::int64_t x = 0; x < n; ++x)
    for (std::int64_t y = 0; y < n; ++y) sum[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = b.add(x, y);
  std::map<std::pair<std::int64_t, std::int64_t>, std::size_t> pid;
  for (std::int64_t x = 1; x < n; ++x)
    for (std::int64_t y = x; y < n; ++y) pid.emplace(std::pair{x, y}, pid.size());
  CocycleSystem sys;
  sys.unknowns = pid.size();
  auto term = [&](std::map<std::size_t, int>& row, std::int64_t x, std::int64_t y, int c) {
    if (x == 0 || y == 0) return;
    auto it = row.emplace(pid.at(std::pair{std::min(x, y), std::max(x, y)}), 0).first;
    it->second += c;
    if (it->second == 0) row.erase(it);
  };
  std::set<std::map<std::size_t, int>> seen;
  for (std::int64_t x = 1; x < n; ++x)
    for (std::int64_t y = 1; y < n; ++y)
      for (std::int64_t z = x; z < n; ++z) {
        std::map<std::size_t, int> row;
        term(row, x, y, 1);
        term(row, sum[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)], z, 1);
        term(row, y, z, -1);
        term(row, x, sum[static_cast<std::size_t>(y)][static_cast<std::size_t>(z)], -1);
        if (!row.empty() && seen.insert(row).second) sys.equations.push_back(std::move(row));
      }
  // (dg)(x, y) = g(x) + g(y) - g(x + y)
  for (std::int64_t w = 1; w < n; ++w) {
    std::map<std::size_t, int> col;
    for (const auto& [xy, idx] : pid) {
      int c = (xy.first == w) + (xy.second == w) - (sum[static_cast<std::size_t>(xy.first)][static_cast<std::size_t>(xy.second)] == w);
      if (c != 0) col[idx] = c;
    }
    sys.coboundaries.push_back(std::move(col));
  }
  return sys;
}

Row dense(const std::map<std::size_t, int>& sparse, std::size_t n, std::int32_t q) {
  Row r(n, 0);
  for (const auto& [j, c] : sparse) r[j] = ((c % q) + q) % q;
  return r;
}

/// Cyclic orders of (cocycles / coboundaries) with coefficients in Z/p^k.
std::vector<std::int64_t> cohomology_over(const CocycleSystem& sys, std::int32_t p, int k) {
  LocalRing ring{p, k, static_cast<std::int32_t>(power(p, k))};
  const std::size_t n = sys.unknowns;
  std::vector<Row> eqs;
  for (const auto& e : sys.equations) eqs.push_back(dense(e, n, ring.q));
  std::vector<Row> right(n, Row(n, 0));
  for (std::size_t j = 0; j < n; ++j) right[j][j] = 1;
  Elimination e = local_eliminate(ring, eqs, n, &right);

  std::vector<Row> kernel;
  std::vector<int> kernel_val(n, 0);
  std::vector<bool> pivot(n, false);
  for (std::size_t t = 0; t < e.pivot_cols.size(); ++t) {
    pivot[static_cast<std::size_t>(e.pivot_cols[t])] = true;
    kernel_val[static_cast<std::size_t>(e.pivot_cols[t])] = k - e.pivot_vals[t];
  }
  for (std::size_t j = 0; j < n; ++j) {
    const std::int64_t s = power(p, kernel_val[j]);
    if (s == ring.q) continue;
    Row g = right[j];
    for (auto& x : g) x = static_cast<std::int32_t>((x * s) % ring.q);
    kernel.push_back(std::move(g));
  }
  std::vector<Row> bd;
  for (const auto& c : sys.coboundaries) bd.push_back(dense(c, n, ring.q));
  const int log_b = generated_log_order(ring, bd, n);

  // h[t] = log_p |p^t H|
  std::vector<int> h(static_cast<std::size_t>(k) + 2, 0);
  for (int t = 0; t <= k; ++t) {
    std::vector<Row> gens = bd;
    const std::int64_t s = power(p, t);
    for (const Row& g : kernel) {
      Row r = g;
      for (auto& x : r) x = static_cast<std::int32_t>((x * s) % ring.q);
      gens.push_back(std::move(r));
    }
    h[static_cast<std::size_t>(t)] = generated_log_order(ring, gens, n) - log_b;
  }
  std::vector<std::int64_t> orders;
  for (int s = 1; s <= k; ++s) {
    int at_least = h[static_cast<std::size_t>(s - 1)] - h[static_cast<std::size_t>(s)];
    int above = h[static_cast<std::size_t>(s)] - h[static_cast<std::size_t>(s + 1)];
    for (int c = 0; c < at_least - above; ++c) orders.push_back(power(p, s));
  }
  return orders;
}

}  // namespace

FgAbGroup ext1_by_factor_sets(const FgAbGroup& b, const FgAbGroup& a) {
  FiniteModel ma(a), mb(b);
  if (ma.size() * mb.size() * mb.size() > 10000) throw DomainError("factor sets: |a| |b|^2 exceeds 10^4");
  if (ma.size() == 1 || mb.size() == 1) return FgAbGroup();
  CocycleSystem sys = cocycle_system(mb);
  std::vector<long long> orders;
  std::map<std::int64_t, std::vector<std::int64_t>> cache;
  for (const Integer& d : invariants_by_counting(a).factors) {
    std::int64_t rest = to_int64(d);
    for (std::int64_t p : prime_factors(rest)) {
      int k = 0;
      while (rest % p == 0) {
        rest /= p;
        ++k;
      }
      const std::int64_t q = power(p, k);
      auto it = cache.find(q);
      if (it == cache.end()) it = cache.emplace(q, cohomology_over(sys, static_cast<std::int32_t>(p), k)).first;
      for (std::int64_t o : it->second) orders.push_back(o);
    }
  }
  return FgAbGroup::from_orders(orders);
}

FgAbGroup splitting_formula_ext(const TwoTermComplex& k, const TwoTermComplex& l, int i) {
  const FgAbGroup h1k = pi1(k).group(), h0k = pi0(k).group();
  const FgAbGroup h1l = pi1(l).group(), h0l = pi0(l).group();
  switch (i) {
    case -1:
      return hom_group(h0k, h1l).group();
    case 0:
      return direct_sum(direct_sum(hom_group(h0k, h0l).group(), ext1_group(h0k, h1l)), hom_group(h1k, h1l).group());
    case 1:
      return direct_sum(direct_sum(ext1_group(h0k, h0l), hom_group(h1k, h0l).group()), ext1_group(h1k, h1l));
    default:
      throw InputError("splitting formula degree must be -1, 0 or 1");
  }
}

}  // namespace picard::oracle
