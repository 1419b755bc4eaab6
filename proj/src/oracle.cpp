#include "orbital/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>

namespace orbital::oracle {

using gfq::FieldElem;
using gfq::FieldTower;

Matrix identity_matrix(const FieldTower& F, unsigned size) {
  Matrix m{size, std::vector<FieldElem>(size * size, F.zero())};
  for (unsigned i = 0; i < size; ++i) m.entries[i * size + i] = F.one();
  return m;
}

Matrix multiply(const FieldTower& F, const Matrix& a, const Matrix& b) {
  if (a.size != b.size) throw std::invalid_argument("multiply: size mismatch");
  const unsigned n = a.size;
  Matrix c{n, std::vector<FieldElem>(n * n, F.zero())};
  for (unsigned i = 0; i < n; ++i)
    for (unsigned k = 0; k < n; ++k) {
      const FieldElem x = a.at(i, k);
      if (x == F.zero()) continue;
      for (unsigned j = 0; j < n; ++j)
        c.entries[i * n + j] = F.add(c.entries[i * n + j], F.mul(x, b.at(k, j)));
    }
  return c;
}

FieldElem determinant(const FieldTower& F, Matrix m) {
  const unsigned n = m.size;
  FieldElem det = F.one();
  auto at = [&](unsigned i, unsigned j) -> FieldElem& { return m.entries[i * n + j]; };
  for (unsigned col = 0; col < n; ++col) {
    unsigned pivot = col;
    while (pivot < n && at(pivot, col) == F.zero()) ++pivot;
    if (pivot == n) return F.zero();
    if (pivot != col) {
      for (unsigned j = 0; j < n; ++j) std::swap(at(pivot, j), at(col, j));
      det = F.neg(det);
    }
    det = F.mul(det, at(col, col));
    const FieldElem inv = F.inv(at(col, col));
    for (unsigned i = col + 1; i < n; ++i) {
      const FieldElem c = F.mul(at(i, col), inv);
      if (c == F.zero()) continue;
      for (unsigned j = col; j < n; ++j) at(i, j) = F.sub(at(i, j), F.mul(c, at(col, j)));
    }
  }
  return det;
}

namespace {

bool is_scalar(const FieldTower& F, const Matrix& m) {
  const FieldElem d = m.at(0, 0);
  for (unsigned i = 0; i < m.size; ++i)
    for (unsigned j = 0; j < m.size; ++j)
      if (m.at(i, j) != (i == j ? d : F.zero())) return false;
  return true;
}

}  // namespace

std::uint64_t linear_order(const FieldTower& F, const Matrix& m) {
  if (determinant(F, m) == F.zero()) throw std::invalid_argument("linear_order: singular matrix");
  const Matrix id = identity_matrix(F, m.size);
  Matrix power = m;
  for (std::uint64_t k = 1;; ++k) {
    if (power == id) return k;
    power = multiply(F, power, m);
  }
}

ProjMatrix ProjMatrix::canonical(const FieldTower& F, Matrix m) {
  if (determinant(F, m) == F.zero()) throw std::invalid_argument("ProjMatrix: singular matrix");
  const auto lead = std::find_if(m.entries.begin(), m.entries.end(), [&](FieldElem x) { return x != F.zero(); });
  const FieldElem inv = F.inv(*lead);
  for (auto& x : m.entries) x = F.mul(x, inv);
  ProjMatrix out;
  out.m_ = std::move(m);
  return out;
}

std::uint64_t projective_order(const FieldTower& F, const ProjMatrix& g) {
  Matrix power = g.matrix();
  for (std::uint64_t k = 1;; ++k) {
    if (is_scalar(F, power)) return k;
    power = multiply(F, power, g.matrix());
  }
}

const FieldTower& base_field(const PrimePower& q) { return gfq::cached_tower(q.p, q.e, 1); }

std::uint64_t gl_group_order(unsigned size, const PrimePower& q) {
  std::uint64_t order = 1;
  const std::uint64_t qn = numtheory::checked_pow(q.q, size);
  std::uint64_t qi = 1;
  for (unsigned i = 0; i < size; ++i) {
    order = numtheory::checked_mul(order, qn - qi);
    qi *= q.q;
  }
  return order;
}

std::uint64_t pgl_group_order(unsigned dim, const PrimePower& q) { return gl_group_order(dim + 1, q) / (q.q - 1); }

namespace {

void check_group_budget(std::uint64_t order, const Budget& budget, const char* what) {
  if (order > budget.max_group_order) {
    throw gfq::BudgetExceeded(std::string(what) + " has order " + std::to_string(order) + ", above the limit " +
                              std::to_string(budget.max_group_order));
  }
}

// Calls f(matrix) for every n x n matrix over F whose first nonzero entry is
// in `lead_one` form when requested.
template <class F>
void for_each_matrix(const FieldTower& K, unsigned n, bool lead_one, F&& f) {
  const std::uint64_t q = K.size();
  const unsigned cells = n * n;
  std::vector<std::uint64_t> digits(cells, 0);
  Matrix m{n, std::vector<FieldElem>(cells, K.zero())};
  for (;;) {
    bool emit = true;
    if (lead_one) {
      const auto lead = std::find_if(digits.begin(), digits.end(), [](std::uint64_t d) { return d != 0; });
      emit = lead != digits.end() && *lead == 1;
    }
    if (emit) {
      for (unsigned i = 0; i < cells; ++i) m.entries[i] = K.element(digits[i]);
      f(m);
    }
    unsigned pos = cells;
    while (pos > 0 && ++digits[pos - 1] == q) digits[--pos] = 0;
    if (pos == 0) return;
  }
}

}  // namespace

std::vector<Matrix> enumerate_gl(unsigned size, const PrimePower& q, const Budget& budget) {
  if (size == 0) throw std::invalid_argument("enumerate_gl: size must be positive");
  check_group_budget(gl_group_order(size, q), budget, "GL");
  const FieldTower& F = base_field(q);
  std::vector<Matrix> out;
  for_each_matrix(F, size, false, [&](const Matrix& m) {
    if (determinant(F, m) != F.zero()) out.push_back(m);
  });
  return out;
}

std::vector<ProjMatrix> enumerate_pgl(unsigned dim, const PrimePower& q, const Budget& budget) {
  if (dim == 0) throw std::invalid_argument("enumerate_pgl: dimension must be positive");
  check_group_budget(pgl_group_order(dim, q), budget, "PGL");
  const FieldTower& F = base_field(q);
  std::vector<ProjMatrix> out;
  for_each_matrix(F, dim + 1, true, [&](const Matrix& m) {
    if (determinant(F, m) != F.zero()) out.push_back(ProjMatrix::canonical(F, m));
  });
  return out;
}

// ---------------------------------------------------------------------------
// Projective point indexing. With Q = |F_{q^r}|, a canonical point whose
// leading 1 sits at position j has index offset_j + sum_{i>j} code_i Q^{N-i},
// offset_j = sum_{k<j} Q^{N-k}.

namespace {

struct PointSpace {
  unsigned dim;
  std::uint64_t Q;
  std::vector<std::uint64_t> offset;  // dim + 2 entries, last = total
  std::vector<std::uint64_t> qpow;    // Q^k

  PointSpace(unsigned n, std::uint64_t field_size) : dim(n), Q(field_size) {
    qpow.assign(dim + 1, 1);
    for (unsigned k = 1; k <= dim; ++k) qpow[k] = numtheory::checked_mul(qpow[k - 1], Q);
    offset.assign(dim + 2, 0);
    for (unsigned j = 0; j <= dim; ++j) offset[j + 1] = offset[j] + qpow[dim - j];
  }

  std::uint64_t count() const { return offset[dim + 1]; }

  // coords must already be canonical.
  std::uint64_t encode(const FieldElem* coords) const {
    unsigned j = 0;
    while (coords[j].code == 0) ++j;
    std::uint64_t idx = 0;
    for (unsigned i = j + 1; i <= dim; ++i) idx = idx * Q + coords[i].code;
    return offset[j] + idx;
  }

  void decode(std::uint64_t idx, FieldElem* coords) const {
    unsigned j = 0;
    while (idx >= offset[j + 1]) ++j;
    idx -= offset[j];
    for (unsigned i = 0; i < j; ++i) coords[i] = {0};
    coords[j] = {1};
    for (unsigned i = dim; i > j; --i) {
      coords[i] = {static_cast<std::uint32_t>(idx % Q)};
      idx /= Q;
    }
  }
};

void check_point_budget(std::uint64_t points, const Budget& budget) {
  if (points > (std::uint64_t{1} << budget.field_bits)) {
    throw gfq::BudgetExceeded("point set of size " + std::to_string(points) + " exceeds 2^" +
                              std::to_string(budget.field_bits));
  }
}

// y = M x followed by scaling to canonical form; entries of M are already
// embedded in the field.
inline void apply(const FieldTower& K, const std::vector<FieldElem>& M, unsigned n, const FieldElem* x,
                  FieldElem* y) {
  for (unsigned i = 0; i < n; ++i) {
    FieldElem acc = K.zero();
    for (unsigned j = 0; j < n; ++j) acc = K.add(acc, K.mul(M[i * n + j], x[j]));
    y[i] = acc;
  }
  unsigned j = 0;
  while (y[j].code == 0) ++j;
  if (y[j] != K.one()) {
    const FieldElem inv = K.inv(y[j]);
    for (unsigned i = j; i < n; ++i) y[i] = K.mul(y[i], inv);
  }
}

std::uint64_t sigma_image(const FieldTower& K, const PointSpace& S, std::uint64_t idx, std::vector<FieldElem>& buf) {
  S.decode(idx, buf.data());
  for (auto& c : buf) c = K.frobenius_q(c);
  return S.encode(buf.data());
}

}  // namespace

std::vector<ProjPoint> points_of_degree(unsigned dim, const FieldTower& t, const Budget& budget) {
  const PointSpace S(dim, t.size());
  check_point_budget(S.count(), budget);
  const unsigned r = t.level();
  std::vector<ProjPoint> out;
  std::vector<FieldElem> buf(dim + 1);
  for (std::uint64_t idx = 0; idx < S.count(); ++idx) {
    // degree = length of the sigma-cycle through idx
    unsigned len = 0;
    std::uint64_t cur = idx;
    do {
      cur = sigma_image(t, S, cur, buf);
      ++len;
    } while (cur != idx);
    if (len != r) continue;
    ProjPoint P{r, std::vector<FieldElem>(dim + 1)};
    S.decode(idx, P.coords.data());
    out.push_back(std::move(P));
  }
  return out;
}

// ---------------------------------------------------------------------------

struct BurnsideContext::Impl {
  struct Level {
    unsigned r;
    const FieldTower& tower;
    std::vector<FieldElem> embed;
    PointSpace space;
    std::vector<std::int32_t> orbit_of;  // sigma-orbit id of a degree-r point, -1 otherwise
    std::vector<std::uint64_t> reps;     // one point index per sigma-orbit
  };

  unsigned dim;
  PrimePower q;
  unsigned nmax;
  const FieldTower& base;
  Budget budget;
  mutable std::once_flag group_once;
  mutable std::vector<ProjMatrix> group;  // enumerated on first use
  std::vector<Level> levels;              // levels[r - 1]

  Impl(unsigned d, const PrimePower& qq, unsigned n, const Budget& b)
      : dim(d), q(qq), nmax(n), base(base_field(qq)), budget(b) {
    if (dim == 0) throw std::invalid_argument("BurnsideContext: dimension must be positive");
    check_group_budget(pgl_group_order(dim, q), budget, "PGL");
    for (unsigned r = 1; r <= nmax; ++r) {
      const FieldTower& K = gfq::cached_tower(q.p, q.e, r, budget.field_bits);
      PointSpace S(dim, K.size());
      check_point_budget(S.count(), budget);
      Level L{r, K, embed_base_field(base, K), S, std::vector<std::int32_t>(S.count(), -1), {}};
      std::vector<FieldElem> buf(dim + 1);
      std::vector<std::uint64_t> cycle;
      for (std::uint64_t idx = 0; idx < S.count(); ++idx) {
        if (L.orbit_of[idx] != -1) continue;
        cycle.clear();
        std::uint64_t cur = idx;
        do {
          cycle.push_back(cur);
          cur = sigma_image(L.tower, S, cur, buf);
        } while (cur != idx);
        if (cycle.size() != r) {
          for (auto c : cycle) L.orbit_of[c] = -2;  // lower degree, skip on revisit
          continue;
        }
        const auto id = static_cast<std::int32_t>(L.reps.size());
        for (auto c : cycle) L.orbit_of[c] = id;
        L.reps.push_back(idx);
      }
      for (auto& o : L.orbit_of)
        if (o == -2) o = -1;
      levels.push_back(std::move(L));
    }
  }

  std::vector<FieldElem> embedded(const Level& L, const ProjMatrix& g) const {
    std::vector<FieldElem> M(g.matrix().entries.size());
    for (std::size_t i = 0; i < M.size(); ++i) M[i] = L.embed[g.matrix().entries[i].code];
    return M;
  }

  // Image of each sigma-orbit (as an orbit id) under gamma.
  std::vector<std::int32_t> orbit_permutation(const Level& L, const ProjMatrix& g) const {
    if (g.dim() != dim) throw std::invalid_argument("BurnsideContext: dimension mismatch");
    const auto M = embedded(L, g);
    const unsigned n = dim + 1;
    std::vector<FieldElem> x(n), y(n);
    std::vector<std::int32_t> perm(L.reps.size());
    for (std::size_t k = 0; k < L.reps.size(); ++k) {
      L.space.decode(L.reps[k], x.data());
      apply(L.tower, M, n, x.data(), y.data());
      perm[k] = L.orbit_of[L.space.encode(y.data())];
    }
    return perm;
  }
};

BurnsideContext::BurnsideContext(unsigned dim, const PrimePower& q, unsigned nmax, const Budget& budget)
    : impl_(std::make_unique<Impl>(dim, q, nmax, budget)) {}
BurnsideContext::~BurnsideContext() = default;
BurnsideContext::BurnsideContext(BurnsideContext&&) noexcept = default;
BurnsideContext& BurnsideContext::operator=(BurnsideContext&&) noexcept = default;

unsigned BurnsideContext::dim() const { return impl_->dim; }
const PrimePower& BurnsideContext::q() const { return impl_->q; }
unsigned BurnsideContext::nmax() const { return impl_->nmax; }
const FieldTower& BurnsideContext::base() const { return impl_->base; }
const std::vector<ProjMatrix>& BurnsideContext::group() const {
  std::call_once(impl_->group_once, [this] { impl_->group = enumerate_pgl(impl_->dim, impl_->q, impl_->budget); });
  return impl_->group;
}

std::uint64_t BurnsideContext::degree_point_count(unsigned r) const {
  if (r == 0 || r > impl_->nmax) throw std::out_of_range("degree_point_count: level out of range");
  return impl_->levels[r - 1].reps.size() * r;
}

OrbitSizeTally BurnsideContext::joint_orbit_tally(const ProjMatrix& g, unsigned n) const {
  if (n > impl_->nmax) throw std::out_of_range("joint_orbit_tally: n exceeds the precomputed range");
  OrbitSizeTally tally;
  for (unsigned r = 1; r <= n; ++r) {
    const auto& L = impl_->levels[r - 1];
    const auto perm = impl_->orbit_permutation(L, g);
    std::vector<char> seen(perm.size(), 0);
    for (std::size_t k = 0; k < perm.size(); ++k) {
      if (seen[k]) continue;
      std::uint64_t len = 0;
      for (std::size_t c = k; !seen[c]; c = static_cast<std::size_t>(perm[c])) {
        seen[c] = 1;
        ++len;
      }
      ++tally[len * r];
    }
  }
  return tally;
}

std::vector<std::vector<ProjPoint>> BurnsideContext::joint_orbits(const ProjMatrix& g, unsigned r) const {
  if (r == 0 || r > impl_->nmax) throw std::out_of_range("joint_orbits: level out of range");
  const auto& L = impl_->levels[r - 1];
  const auto M = impl_->embedded(L, g);
  const unsigned n = impl_->dim + 1;
  std::vector<std::vector<ProjPoint>> out;
  std::vector<char> seen(L.space.count(), 0);
  std::vector<FieldElem> x(n), y(n);
  for (std::uint64_t start = 0; start < L.space.count(); ++start) {
    if (L.orbit_of[start] < 0 || seen[start]) continue;
    // closure under gamma and sigma
    std::vector<std::uint64_t> stack{start}, members;
    seen[start] = 1;
    while (!stack.empty()) {
      const auto idx = stack.back();
      stack.pop_back();
      members.push_back(idx);
      L.space.decode(idx, x.data());
      apply(L.tower, M, n, x.data(), y.data());
      const auto a = L.space.encode(y.data());
      const auto b = sigma_image(L.tower, L.space, idx, y);
      for (auto next : {a, b})
        if (!seen[next]) {
          seen[next] = 1;
          stack.push_back(next);
        }
    }
    std::sort(members.begin(), members.end());
    std::vector<ProjPoint> orbit;
    for (auto idx : members) {
      ProjPoint P{r, std::vector<FieldElem>(n)};
      L.space.decode(idx, P.coords.data());
      orbit.push_back(std::move(P));
    }
    out.push_back(std::move(orbit));
  }
  return out;
}

OrbitSizeTally joint_orbit_tally(const ProjMatrix& g, unsigned dim, const PrimePower& q, unsigned n,
                                 const Budget& budget) {
  Budget b = budget;
  b.max_group_order = ~std::uint64_t{0};  // the group itself is never enumerated here
  const BurnsideContext ctx(dim, q, n, b);
  return ctx.joint_orbit_tally(g, n);
}

std::vector<Integer> fix_series(const OrbitSizeTally& tally, unsigned nmax, bool multiset) {
  std::vector<Integer> c(nmax + 1, 0);
  c[0] = 1;
  for (auto [size, count] : tally) {
    if (size == 0 || size > nmax || count == 0) continue;
    const auto s = static_cast<unsigned>(size);
    // multiply by (1 + x^s)^count or (1 - x^s)^{-count}
    std::vector<Integer> factor(nmax / s + 1);
    for (unsigned k = 0; k < factor.size(); ++k) {
      mpz_class b;
      if (multiset)
        mpz_bin_uiui(b.get_mpz_t(), count + k - 1, k);
      else
        mpz_bin_uiui(b.get_mpz_t(), count, k);
      factor[k] = b;
    }
    std::vector<Integer> next(nmax + 1, 0);
    for (unsigned i = 0; i <= nmax; ++i) {
      if (c[i] == 0) continue;
      for (unsigned k = 0; i + k * s <= nmax; ++k) next[i + k * s] += c[i] * factor[k];
    }
    c = std::move(next);
  }
  return c;
}

Integer fix_count(const OrbitSizeTally& tally, unsigned n, bool multiset) { return fix_series(tally, n, multiset)[n]; }

BurnsideTable burnside_table(const BurnsideContext& ctx, std::vector<FixedSetRecord>* per_gamma) {
  const auto& group = ctx.group();
  const unsigned nmax = ctx.nmax();
  unsigned workers = std::max(1U, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(1, group.size() / 16)));

  std::vector<FixedSetRecord> records;
  if (per_gamma) records.resize(group.size());
  struct Partial {
    std::vector<Integer> sets, multisets;
  };
  std::vector<Partial> partial(workers, Partial{std::vector<Integer>(nmax + 1, 0), std::vector<Integer>(nmax + 1, 0)});
  std::atomic<std::size_t> next{0};
  auto work = [&](unsigned w) {
    for (std::size_t i = next++; i < group.size(); i = next++) {
      const auto tally = ctx.joint_orbit_tally(group[i], nmax);
      auto s = fix_series(tally, nmax, false);
      auto m = fix_series(tally, nmax, true);
      for (unsigned n = 0; n <= nmax; ++n) {
        partial[w].sets[n] += s[n];
        partial[w].multisets[n] += m[n];
      }
      if (per_gamma) records[i] = FixedSetRecord{group[i], std::move(s), std::move(m)};
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> threads;
    for (unsigned w = 0; w < workers; ++w) threads.emplace_back(work, w);
    for (auto& t : threads) t.join();
  }

  BurnsideTable table;
  table.group_order = group.size();
  table.sets.assign(nmax + 1, 0);
  table.multisets.assign(nmax + 1, 0);
  for (const auto& p : partial)
    for (unsigned n = 0; n <= nmax; ++n) {
      table.sets[n] += p.sets[n];
      table.multisets[n] += p.multisets[n];
    }
  const Integer order = static_cast<unsigned long>(group.size());
  for (unsigned n = 0; n <= nmax; ++n) {
    for (auto* v : {&table.sets, &table.multisets}) {
      if ((*v)[n] % order != 0) {
        throw std::logic_error("burnside_table: fixed-point sum at n = " + std::to_string(n) +
                               " is not divisible by the group order");
      }
      (*v)[n] /= order;
    }
  }
  if (per_gamma) *per_gamma = std::move(records);
  return table;
}

Integer burnside_count(unsigned dim, const PrimePower& q, unsigned n, bool multiset, const Budget& budget) {
  const BurnsideContext ctx(dim, q, n, budget);
  const auto table = burnside_table(ctx);
  return multiset ? table.multisets[n] : table.sets[n];
}

}  // namespace orbital::oracle
