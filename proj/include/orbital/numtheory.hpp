#pragma once

// Divisor combinatorics for the subtype sums of the N = 1, 2 orbit-count
// formulas. Arguments are divisors of q - 1, q + 1 and q^2 + q + 1, so
// 64-bit words are ample; every product is overflow-checked.

#include <compare>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace orbital {

/// q = p^e with p prime and e >= 1.
struct PrimePower {
  std::uint64_t q = 0;
  std::uint64_t p = 0;
  unsigned e = 0;

  /// Throws std::invalid_argument("q is not a prime power") when q is not p^e.
  static PrimePower from_q(std::uint64_t q);
  /// Validates p prime, e >= 1 and that p^e fits.
  static PrimePower from_parts(std::uint64_t p, unsigned e);

  bool operator==(const PrimePower&) const = default;
};

std::optional<PrimePower> as_prime_power(std::uint64_t q);

namespace numtheory {

struct DivisorTriple {
  std::uint64_t d = 0;
  std::uint64_t e = 0;
  std::uint64_t f = 0;

  auto operator<=>(const DivisorTriple&) const = default;
};

struct HHSplit {
  std::uint64_t h = 1;
  std::uint64_t H = 1;

  bool operator==(const HHSplit&) const = default;
};

bool is_prime(std::uint64_t n);

/// Prime factorization by trial division, primes ascending.
std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n);

/// All positive divisors, ascending.
std::vector<std::uint64_t> divisors(std::uint64_t n);

/// Exponent of the prime l in n (n >= 1).
unsigned valuation(std::uint64_t n, std::uint64_t l);

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b);
std::uint64_t checked_pow(std::uint64_t base, unsigned exponent);

std::uint64_t euler_phi(std::uint64_t n);
int moebius(std::uint64_t n);

/// Multiplicative, psi(l^r) = (l - 2) l^(r-1), psi(1) = 1.
std::uint64_t psi(std::uint64_t n);

/// Requires d | q+1, e | q-1, d > 1, e > 1.
///   1 if d is odd; 0 if d is even and e | (q-1)/2; 2 otherwise.
int delta_de(std::uint64_t d, std::uint64_t e, const PrimePower& q);

/// Splits def/m^2 (m = lcm(d,e)) into h * H where each prime power of the
/// quotient goes to H if its exponent equals v_l(m), to h if it is smaller.
/// An exponent larger than v_l(m) means the triple is not a valid S_G member.
HHSplit hH_split(std::uint64_t d, std::uint64_t e, std::uint64_t f);

/// True iff d >= e >= f > 1 and lcm(d,e) = lcm(d,f) = lcm(e,f).
bool satisfies_sg_condition(const DivisorTriple& t);

/// Triples of divisors of q - 1 satisfying the S_G condition, lexicographic.
std::vector<DivisorTriple> enumerate_sg(const PrimePower& q);

}  // namespace numtheory
}  // namespace orbital
