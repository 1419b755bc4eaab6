#include "orbital/oracle.hpp"
#include "orbital/poly.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <tuple>

namespace orbital::oracle {

using gfq::FieldElem;
using gfq::FieldTower;

namespace {

// automatic picks enumeration below these sizes
constexpr unsigned kEnumerateFieldBits = 16;
constexpr std::uint64_t kEnumeratePoints = std::uint64_t{1} << 18;

std::uint64_t field_size(const PrimePower& q, std::uint64_t degree, unsigned max_bits) {
  std::uint64_t size = 1;
  for (std::uint64_t i = 0; i < degree; ++i) {
    if (size > (std::uint64_t{1} << max_bits) / q.q) return 0;  // over the cap
    size *= q.q;
  }
  return size;
}

std::uint64_t projective_points(unsigned dim, std::uint64_t Q) {
  std::uint64_t total = 0, power = 1;
  for (unsigned k = 0; k <= dim; ++k) {
    total += power;
    power = numtheory::checked_mul(power, Q);
  }
  return total;
}

std::uint64_t affine_points(unsigned dim, std::uint64_t Q) { return numtheory::checked_pow(Q, dim); }

// ---------------------------------------------------------------------------
// Kernel route.

using FPoly = poly::Poly<FieldTower>;

// Matrix of w -> w^{q^r} on F_q[z]/(g), deg g = D, as D x D over F_q
// (column j is the image of z^j).
struct FrobeniusData {
  std::vector<FieldElem> frob;  // row-major
};

const FrobeniusData& frobenius_data(const FieldTower& F, unsigned D, unsigned r) {
  static std::mutex mutex;
  static std::map<std::tuple<std::uint32_t, unsigned, unsigned, unsigned>, FrobeniusData> cache;
  const std::lock_guard lock(mutex);
  const auto key = std::make_tuple(F.characteristic(), F.base_exponent(), D, r);
  if (auto it = cache.find(key); it != cache.end()) return it->second;

  const FPoly g = poly::smallest_irreducible(F, D);
  FPoly h = poly::mod(F, FPoly{F.zero(), F.one()}, g);
  for (unsigned i = 0; i < r; ++i) h = poly::pow_mod(F, h, F.size(), g);
  FrobeniusData data;
  data.frob.assign(static_cast<std::size_t>(D) * D, F.zero());
  FPoly col = poly::mod(F, FPoly{F.one()}, g);
  for (unsigned j = 0; j < D; ++j) {
    for (std::size_t k = 0; k < col.size(); ++k) data.frob[k * D + j] = col[k];
    col = poly::mul_mod(F, col, h, g);
  }
  return cache.emplace(key, std::move(data)).first->second;
}

std::size_t rank(const FieldTower& F, std::vector<FieldElem> m, std::size_t rows, std::size_t cols) {
  std::size_t rk = 0;
  for (std::size_t col = 0; col < cols && rk < rows; ++col) {
    std::size_t pivot = rk;
    while (pivot < rows && m[pivot * cols + col] == F.zero()) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rk)
      for (std::size_t j = 0; j < cols; ++j) std::swap(m[pivot * cols + j], m[rk * cols + j]);
    const FieldElem inv = F.inv(m[rk * cols + col]);
    for (std::size_t i = rk + 1; i < rows; ++i) {
      const FieldElem c = F.mul(m[i * cols + col], inv);
      if (c == F.zero()) continue;
      for (std::size_t j = col; j < cols; ++j) m[i * cols + j] = F.sub(m[i * cols + j], F.mul(c, m[rk * cols + j]));
    }
    ++rk;
  }
  return rk;
}

// dim over F_q of {w in F_{q^{r t}}^n : sigma^r(w) = B w}, t = ord(B).
std::size_t twisted_kernel_dim(const FieldTower& F, const Matrix& B, unsigned r) {
  const unsigned n = B.size;
  const auto t = linear_order(F, B);
  if (t * r > 4096) throw gfq::BudgetExceeded("twisted kernel: extension degree too large");
  const auto D = static_cast<unsigned>(t * r);
  const auto& frob = frobenius_data(F, D, r).frob;
  const std::size_t size = static_cast<std::size_t>(n) * D;
  std::vector<FieldElem> M(size * size, F.zero());
  for (unsigned a = 0; a < n; ++a)
    for (unsigned b = 0; b < n; ++b) {
      const FieldElem c = B.at(a, b);
      for (unsigned k = 0; k < D; ++k) {
        const std::size_t row = a * D + k;
        if (a == b)
          for (unsigned j = 0; j < D; ++j) M[row * size + b * D + j] = frob[k * D + j];
        M[row * size + b * D + k] = F.sub(M[row * size + b * D + k], c);
      }
    }
  return size - rank(F, std::move(M), size, size);
}

Integer projective_kernel_count(const FieldTower& F, const ProjMatrix& g, unsigned r) {
  const auto s = projective_order(F, g);
  const Integer qr = ipow(Integer(static_cast<unsigned long>(F.size())), r);
  Integer total = 0;
  Matrix power = identity_matrix(F, g.matrix().size);
  for (std::uint64_t i = 0; i < s; ++i) {
    const auto kappa = twisted_kernel_dim(F, power, r);
    const Integer lifts = ipow(Integer(static_cast<unsigned long>(F.size())), kappa) - 1;
    if (lifts % (qr - 1) != 0) throw std::logic_error("twisted kernel: lift count not divisible by q^r - 1");
    total += lifts / (qr - 1);
    power = multiply(F, power, g.matrix());
  }
  if (total % s != 0) throw std::logic_error("twisted kernel: orbit sum not divisible by the order");
  return total / static_cast<unsigned long>(s);
}

Integer affine_kernel_count(const FieldTower& F, const Matrix& g) {
  const auto s = linear_order(F, g);
  Integer total = 0;
  Matrix power = identity_matrix(F, g.size);
  for (std::uint64_t i = 0; i < s; ++i) {
    total += ipow(Integer(static_cast<unsigned long>(F.size())), twisted_kernel_dim(F, power, 1));
    power = multiply(F, power, g);
  }
  if (total % s != 0) throw std::logic_error("twisted kernel: orbit sum not divisible by the order");
  return total / static_cast<unsigned long>(s);
}

// ---------------------------------------------------------------------------
// Enumeration route. Points of the ambient space over K = F_{q^L} are indexed
// 0..count-1; gamma and sigma^r are tabulated as permutations.

struct Coder {
  unsigned n;        // number of coordinates
  bool projective;   // canonical form: first nonzero coordinate 1
  std::uint64_t Q;

  void decode(std::uint64_t idx, std::vector<FieldElem>& x) const {
    if (!projective) {
      for (unsigned i = n; i-- > 0;) {
        x[i] = {static_cast<std::uint32_t>(idx % Q)};
        idx /= Q;
      }
      return;
    }
    // block j: leading 1 at j, Q^{n-1-j} points
    unsigned j = 0;
    std::uint64_t block = numtheory::checked_pow(Q, n - 1);
    while (idx >= block) {
      idx -= block;
      ++j;
      block /= Q;
    }
    for (unsigned i = 0; i < j; ++i) x[i] = {0};
    x[j] = {1};
    for (unsigned i = n - 1; i > j; --i) {
      x[i] = {static_cast<std::uint32_t>(idx % Q)};
      idx /= Q;
    }
  }

  std::uint64_t encode(const FieldTower& K, std::vector<FieldElem>& x) const {
    unsigned j = 0;
    std::uint64_t offset = 0;
    if (projective) {
      std::uint64_t block = numtheory::checked_pow(Q, n - 1);
      while (x[j] == K.zero()) {
        offset += block;
        block /= Q;
        ++j;
      }
      const FieldElem inv = K.inv(x[j]);
      for (unsigned i = j; i < n; ++i) x[i] = K.mul(x[i], inv);
      ++j;
    }
    std::uint64_t idx = 0;
    for (unsigned i = j; i < n; ++i) idx = idx * Q + x[i].code;
    return offset + idx;
  }
};

Integer enumerate_count(const PrimePower& q, const Matrix& A, bool projective, std::uint64_t order, unsigned r,
                        const Budget& budget) {
  const FieldTower& F = base_field(q);
  if (order * r > 64) throw gfq::BudgetExceeded("enumeration: extension degree too large");
  const auto degree = static_cast<unsigned>(order * r);
  const std::uint64_t Q = field_size(q, degree, budget.field_bits);
  const unsigned n = A.size;
  std::uint64_t count = 0;
  try {
    count = Q == 0 ? 0 : projective ? projective_points(n - 1, Q) : affine_points(n, Q);
  } catch (const std::overflow_error&) {
    count = ~std::uint64_t{0};
  }
  if (Q == 0 || count > (std::uint64_t{1} << budget.field_bits))
    throw gfq::BudgetExceeded("enumeration over F_" + std::to_string(q.q) + "^" + std::to_string(degree) +
                              " exceeds 2^" + std::to_string(budget.field_bits) + " points");
  const FieldTower& K = gfq::cached_tower(q.p, q.e, degree, budget.field_bits);
  const auto embed = gfq::embed_base_field(F, K);
  const Coder coder{n, projective, K.size()};

  std::vector<FieldElem> M(A.entries.size());
  for (std::size_t i = 0; i < M.size(); ++i) M[i] = embed[A.entries[i].code];
  const std::uint64_t qr = numtheory::checked_pow(q.q, r);

  // cycle id of every point under gamma
  std::vector<std::int64_t> cycle(count, -1);
  std::vector<FieldElem> x(n), y(n);
  std::int64_t cycles = 0;
  for (std::uint64_t start = 0; start < count; ++start) {
    if (cycle[start] != -1) continue;
    std::uint64_t cur = start;
    do {
      cycle[cur] = cycles;
      coder.decode(cur, x);
      for (unsigned i = 0; i < n; ++i) {
        FieldElem acc = K.zero();
        for (unsigned j = 0; j < n; ++j) acc = K.add(acc, K.mul(M[i * n + j], x[j]));
        y[i] = acc;
      }
      cur = coder.encode(K, y);
    } while (cur != start);
    ++cycles;
  }

  // an orbit is counted when sigma^r maps one (hence every) member into it
  std::vector<char> done(static_cast<std::size_t>(cycles), 0);
  Integer stable = 0;
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    const auto c = cycle[idx];
    if (done[c]) continue;
    done[c] = 1;
    coder.decode(idx, x);
    for (auto& v : x) v = K.pow(v, qr);
    if (cycle[coder.encode(K, x)] == c) ++stable;
  }
  return stable;
}

}  // namespace

Integer quotient_point_count(const ProjMatrix& g, const PrimePower& q, unsigned r, QuotientMethod method,
                             const Budget& budget) {
  if (r == 0) throw std::invalid_argument("quotient_point_count: r must be positive");
  const FieldTower& F = base_field(q);
  if (method == QuotientMethod::automatic) {
    const auto s = projective_order(F, g);
    const auto Q = field_size(q, s * r, std::min(kEnumerateFieldBits, budget.field_bits));
    method = Q != 0 && Q <= kEnumeratePoints && projective_points(g.dim(), Q) <= kEnumeratePoints ? QuotientMethod::enumerate
                                                                         : QuotientMethod::twisted_kernel;
  }
  if (method == QuotientMethod::enumerate)
    return enumerate_count(q, g.matrix(), true, projective_order(F, g), r, budget);
  return projective_kernel_count(F, g, r);
}

Integer affine_quotient_count(const Matrix& g, const PrimePower& q, QuotientMethod method, const Budget& budget) {
  const FieldTower& F = base_field(q);
  const auto s = linear_order(F, g);
  if (method == QuotientMethod::automatic) {
    const auto Q = field_size(q, s, std::min(kEnumerateFieldBits, budget.field_bits));
    method = Q != 0 && Q <= kEnumeratePoints && affine_points(g.size, Q) <= kEnumeratePoints ? QuotientMethod::enumerate
                                                                    : QuotientMethod::twisted_kernel;
  }
  if (method == QuotientMethod::enumerate) return enumerate_count(q, g, false, s, 1, budget);
  return affine_kernel_count(F, g);
}

}  // namespace orbital::oracle
