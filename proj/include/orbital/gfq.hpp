#pragma once

// Finite fields F_{q^r}, q = p^e, represented as F_p[x]/(m(x)) with m the
// smallest monic irreducible of degree e*r (coefficients compared
// low-degree first). An element is stored as the base-p integer whose digit
// i is the coefficient of x^i, so equality is coordinate-wise. Arithmetic
// runs on log / antilog / Zech tables built at construction.

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace orbital::gfq {

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Upper bound on log2 of any field or point set the oracle may enumerate.
/// Read from ORBITAL_MAX_FIELD_BITS (default 26).
unsigned max_field_bits();

struct FieldElem {
  std::uint32_t code = 0;

  auto operator<=>(const FieldElem&) const = default;
};

/// Arithmetic modulo a prime, usable as a poly:: coefficient field.
struct PrimeField {
  using Elem = std::uint32_t;
  std::uint32_t p;

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem add(Elem a, Elem b) const { return (a + b) % p; }
  Elem sub(Elem a, Elem b) const { return (a + p - b) % p; }
  Elem mul(Elem a, Elem b) const {
    return static_cast<Elem>(static_cast<std::uint64_t>(a) * b % p);
  }
  Elem inv(Elem a) const;
  std::uint64_t size() const { return p; }
  Elem element(std::uint64_t k) const { return static_cast<Elem>(k); }
};

class FieldTower {
 public:
  using Elem = FieldElem;

  /// F_{p^{e r}}; throws std::invalid_argument if p is not prime or e*r = 0,
  /// BudgetExceeded if p^{e r} > 2^max_bits.
  FieldTower(std::uint32_t p, unsigned e, unsigned r, unsigned max_bits = max_field_bits());

  std::uint32_t characteristic() const { return p_; }
  unsigned base_exponent() const { return e_; }
  unsigned level() const { return r_; }
  unsigned degree() const { return e_ * r_; }
  /// q = p^e.
  std::uint64_t base_size() const { return q_; }
  /// q^r = p^{e r}.
  std::uint64_t size() const { return size_; }
  /// Monic, low-degree first, degree e*r.
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }
  /// A primitive element (the smallest code generating the multiplicative group).
  FieldElem generator() const { return generator_; }

  FieldElem zero() const { return {0}; }
  FieldElem one() const { return {1}; }
  FieldElem element(std::uint64_t k) const { return {static_cast<std::uint32_t>(k)}; }

  FieldElem from_coordinates(const std::vector<std::uint32_t>& coords) const;
  std::vector<std::uint32_t> coordinates(FieldElem x) const;

  FieldElem add(FieldElem a, FieldElem b) const {
    if (p_ == 2) return {a.code ^ b.code};
    if (a.code == 0) return b;
    if (b.code == 0) return a;
    const std::uint32_t la = log_[a.code];
    std::uint32_t k = log_[b.code] + order_ - la;
    if (k >= order_) k -= order_;
    const std::uint32_t z = zech_[k];
    if (z == kNone) return {0};
    return {exp_[la + z]};
  }
  FieldElem neg(FieldElem a) const {
    if (p_ == 2 || a.code == 0) return a;
    return {exp_[log_[a.code] + order_ / 2]};
  }
  FieldElem sub(FieldElem a, FieldElem b) const { return add(a, neg(b)); }
  FieldElem mul(FieldElem a, FieldElem b) const {
    if (a.code == 0 || b.code == 0) return {0};
    return {exp_[log_[a.code] + log_[b.code]]};
  }
  FieldElem inv(FieldElem a) const {
    if (a.code == 0) throw std::domain_error("FieldTower::inv: zero has no inverse");
    const std::uint32_t la = log_[a.code];
    return {exp_[la == 0 ? 0 : order_ - la]};
  }
  FieldElem div(FieldElem a, FieldElem b) const { return mul(a, inv(b)); }
  FieldElem pow(FieldElem a, std::uint64_t k) const;

  /// x -> x^q.
  FieldElem frobenius_q(FieldElem x) const { return pow(x, q_); }
  /// x -> x^p.
  FieldElem frobenius_p(FieldElem x) const { return pow(x, p_); }

  /// Schoolbook polynomial product modulo the modulus; independent of the tables.
  FieldElem mul_slow(FieldElem a, FieldElem b) const;
  /// Digit-wise sum modulo p; independent of the tables.
  FieldElem add_slow(FieldElem a, FieldElem b) const;

 private:
  static constexpr std::uint32_t kNone = 0xffffffffU;

  std::uint32_t p_;
  unsigned e_;
  unsigned r_;
  std::uint64_t q_;
  std::uint64_t size_;
  std::uint32_t order_;  // size - 1
  std::vector<std::uint32_t> modulus_;
  FieldElem generator_;
  std::vector<std::uint32_t> exp_;   // g^k for 0 <= k < 2*order
  std::vector<std::uint32_t> log_;   // inverse of exp on nonzero codes
  std::vector<std::uint32_t> zech_;  // log(1 + g^k), kNone when 1 + g^k = 0
};

/// Process-wide shared instance of FieldTower(p, e, r); built on first use.
/// The budget is checked on every call.
const FieldTower& cached_tower(std::uint32_t p, unsigned e, unsigned r, unsigned max_bits = max_field_bits());

/// The q elements fixed by x -> x^q, ascending by code.
std::vector<FieldElem> base_field_elements(const FieldTower& t);

/// Field embedding F_q -> F_{q^r}: entry c is the image of the element with
/// code c of `base` (which must be the level-1 tower with the same p, e).
/// The image of the base generator x is the smallest-code root of base's
/// modulus inside ext.
std::vector<FieldElem> embed_base_field(const FieldTower& base, const FieldTower& ext);

}  // namespace orbital::gfq
