#include "orbital/gfq.hpp"

#include "orbital/numtheory.hpp"
#include "orbital/poly.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <memory>
#include <mutex>
#include <tuple>
#include <string>

namespace orbital::gfq {

unsigned max_field_bits() {
  if (const char* env = std::getenv("ORBITAL_MAX_FIELD_BITS")) {
    try {
      const int bits = std::stoi(env);
      if (bits > 0 && bits <= 31) return static_cast<unsigned>(bits);
    } catch (const std::exception&) {
    }
    throw std::invalid_argument(std::string("ORBITAL_MAX_FIELD_BITS must be in 1..31, got ") + env);
  }
  return 26;
}

PrimeField::Elem PrimeField::inv(Elem a) const {
  if (a % p == 0) throw std::domain_error("PrimeField::inv: zero has no inverse");
  // a^(p-2)
  Elem result = 1;
  Elem base = a % p;
  std::uint32_t k = p - 2;
  while (k != 0) {
    if (k & 1U) result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

FieldTower::FieldTower(std::uint32_t p, unsigned e, unsigned r, unsigned max_bits)
    : p_(p), e_(e), r_(r) {
  if (!numtheory::is_prime(p)) throw std::invalid_argument("FieldTower: p is not prime");
  if (e == 0 || r == 0) throw std::invalid_argument("FieldTower: e and r must be positive");
  const unsigned n = e * r;
  std::uint64_t size = 1;
  const std::uint64_t limit = std::uint64_t{1} << max_bits;
  for (unsigned i = 0; i < n; ++i) {
    size *= p;
    if (size > limit) {
      throw BudgetExceeded("field of size " + std::to_string(p) + "^" + std::to_string(n) +
                           " exceeds 2^" + std::to_string(max_bits));
    }
  }
  size_ = size;
  q_ = numtheory::checked_pow(p, e);
  order_ = static_cast<std::uint32_t>(size_ - 1);
  modulus_ = poly::smallest_irreducible(PrimeField{p}, n);

  // Primitive element: smallest nonzero code whose order is size - 1.
  const auto factors = numtheory::factorize(order_ == 0 ? 1 : order_);
  const auto slow_pow = [&](FieldElem a, std::uint64_t k) {
    FieldElem result = one();
    while (k != 0) {
      if (k & 1U) result = mul_slow(result, a);
      a = mul_slow(a, a);
      k >>= 1;
    }
    return result;
  };
  generator_ = one();
  for (std::uint32_t c = 1; c < size_; ++c) {
    bool primitive = true;
    for (auto [l, a] : factors) {
      if (order_ > 1 && slow_pow({c}, order_ / l) == one()) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      generator_ = {c};
      break;
    }
  }

  exp_.assign(2 * static_cast<std::size_t>(order_), 0);
  log_.assign(size_, kNone);
  // Walk the powers of the generator on coordinate vectors, multiplying by
  // the generator polynomial and reducing by the monic modulus in place.
  const auto g = coordinates(generator_);
  std::vector<std::uint64_t> cur(n, 0), next(2 * n, 0);
  cur[0] = 1;
  for (std::uint32_t k = 0; k < order_; ++k) {
    std::uint64_t code = 0;
    for (unsigned i = n; i-- > 0;) code = code * p + cur[i];
    if (log_[code] != kNone) throw std::logic_error("FieldTower: generator is not primitive");
    exp_[k] = static_cast<std::uint32_t>(code);
    exp_[k + order_] = static_cast<std::uint32_t>(code);
    log_[code] = k;
    std::fill(next.begin(), next.end(), 0);
    for (unsigned i = 0; i < n; ++i) {
      if (cur[i] == 0) continue;
      for (unsigned j = 0; j < n; ++j) next[i + j] = (next[i + j] + cur[i] * g[j]) % p;
    }
    for (unsigned d = 2 * n - 1; d >= n; --d) {
      const std::uint64_t c = next[d];
      if (c == 0) continue;
      for (unsigned i = 0; i < n; ++i) next[d - n + i] = (next[d - n + i] + (p - c) * modulus_[i]) % p;
      next[d] = 0;
    }
    std::copy(next.begin(), next.begin() + n, cur.begin());
  }
  if (p_ != 2) {
    zech_.assign(order_, kNone);
    for (std::uint32_t k = 0; k < order_; ++k) {
      // 1 + g^k changes only the constant digit
      const std::uint32_t c = exp_[k];
      const std::uint32_t s = c % p_ == p_ - 1 ? c - (p_ - 1) : c + 1;
      zech_[k] = s == 0 ? kNone : log_[s];
    }
  }
}

FieldElem FieldTower::from_coordinates(const std::vector<std::uint32_t>& coords) const {
  if (coords.size() != degree()) throw std::invalid_argument("from_coordinates: wrong length");
  std::uint64_t code = 0;
  for (std::size_t i = coords.size(); i-- > 0;) {
    if (coords[i] >= p_) throw std::invalid_argument("from_coordinates: coordinate out of range");
    code = code * p_ + coords[i];
  }
  return {static_cast<std::uint32_t>(code)};
}

std::vector<std::uint32_t> FieldTower::coordinates(FieldElem x) const {
  std::vector<std::uint32_t> out(degree());
  std::uint32_t c = x.code;
  for (auto& d : out) {
    d = c % p_;
    c /= p_;
  }
  return out;
}

FieldElem FieldTower::pow(FieldElem a, std::uint64_t k) const {
  if (a.code == 0) return k == 0 ? one() : zero();
  const std::uint64_t l = (static_cast<std::uint64_t>(log_[a.code]) * (k % order_)) % order_;
  return {exp_[l]};
}

FieldElem FieldTower::add_slow(FieldElem a, FieldElem b) const {
  const auto x = coordinates(a);
  auto y = coordinates(b);
  for (std::size_t i = 0; i < y.size(); ++i) y[i] = (x[i] + y[i]) % p_;
  return from_coordinates(y);
}

FieldElem FieldTower::mul_slow(FieldElem a, FieldElem b) const {
  const PrimeField F{p_};
  poly::Poly<PrimeField> x = coordinates(a);
  poly::Poly<PrimeField> y = coordinates(b);
  poly::trim(F, x);
  poly::trim(F, y);
  auto z = poly::mod(F, poly::mul(F, x, y), poly::Poly<PrimeField>(modulus_));
  z.resize(degree(), 0);
  return from_coordinates(z);
}

const FieldTower& cached_tower(std::uint32_t p, unsigned e, unsigned r, unsigned max_bits) {
  static std::mutex mutex;
  static std::map<std::tuple<std::uint32_t, unsigned, unsigned>, std::unique_ptr<FieldTower>> cache;
  const std::lock_guard lock(mutex);
  auto& slot = cache[std::make_tuple(p, e, r)];
  if (!slot) {
    slot = std::make_unique<FieldTower>(p, e, r, max_bits);
  } else if (slot->size() > (std::uint64_t{1} << max_bits)) {
    throw BudgetExceeded("field of size " + std::to_string(slot->size()) + " exceeds 2^" + std::to_string(max_bits));
  }
  return *slot;
}

std::vector<FieldElem> base_field_elements(const FieldTower& t) {
  // zero together with the subgroup of order q - 1
  const FieldElem h = t.pow(t.generator(), (t.size() - 1) / (t.base_size() - 1));
  std::vector<FieldElem> out{t.zero()};
  FieldElem x = t.one();
  for (std::uint64_t k = 0; k + 1 < t.base_size(); ++k) {
    out.push_back(x);
    x = t.mul(x, h);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<FieldElem> embed_base_field(const FieldTower& base, const FieldTower& ext) {
  if (base.level() != 1 || base.characteristic() != ext.characteristic() ||
      base.base_exponent() != ext.base_exponent()) {
    throw std::invalid_argument("embed_base_field: base must be the level-1 tower of ext");
  }
  const auto& m = base.modulus();
  const auto evaluate = [&](FieldElem a) {
    // Horner over F_p constants, which have the same code in every tower.
    FieldElem acc = ext.zero();
    for (std::size_t i = m.size(); i-- > 0;) acc = ext.add(ext.mul(acc, a), {m[i]});
    return acc;
  };
  FieldElem root{0};
  bool found = false;
  for (FieldElem a : base_field_elements(ext)) {
    if (evaluate(a) == ext.zero()) {
      root = a;
      found = true;
      break;
    }
  }
  if (!found) throw std::logic_error("embed_base_field: base modulus has no root in the extension");

  std::vector<FieldElem> out(base.size());
  for (std::uint64_t c = 0; c < base.size(); ++c) {
    const auto digits = base.coordinates({static_cast<std::uint32_t>(c)});
    FieldElem acc = ext.zero();
    for (std::size_t i = digits.size(); i-- > 0;) acc = ext.add(ext.mul(acc, root), {digits[i]});
    out[c] = acc;
  }
  return out;
}

}  // namespace orbital::gfq
