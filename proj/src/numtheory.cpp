#include "orbital/numtheory.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace orbital {

namespace {

void require_positive(std::uint64_t n, const char* what) {
  if (n == 0) throw std::invalid_argument(std::string(what) + ": argument must be positive");
}

}  // namespace

std::optional<PrimePower> as_prime_power(std::uint64_t q) {
  if (q < 2) return std::nullopt;
  auto factors = numtheory::factorize(q);
  if (factors.size() != 1) return std::nullopt;
  return PrimePower{q, factors[0].first, factors[0].second};
}

PrimePower PrimePower::from_q(std::uint64_t q) {
  auto pp = as_prime_power(q);
  if (!pp) throw std::invalid_argument("q is not a prime power: " + std::to_string(q));
  return *pp;
}

PrimePower PrimePower::from_parts(std::uint64_t p, unsigned e) {
  if (!numtheory::is_prime(p)) throw std::invalid_argument("p is not prime: " + std::to_string(p));
  if (e == 0) throw std::invalid_argument("exponent e must be positive");
  return PrimePower{numtheory::checked_pow(p, e), p, e};
}

namespace numtheory {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t k = 2; k <= n / k; ++k) {
    if (n % k == 0) return false;
  }
  return true;
}

std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
  require_positive(n, "factorize");
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (std::uint64_t l = 2; l <= n / l; ++l) {
    if (n % l != 0) continue;
    unsigned a = 0;
    while (n % l == 0) {
      n /= l;
      ++a;
    }
    out.emplace_back(l, a);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  require_positive(n, "divisors");
  std::vector<std::uint64_t> out{1};
  for (auto [l, a] : factorize(n)) {
    const std::size_t prior = out.size();
    std::uint64_t power = 1;
    for (unsigned i = 1; i <= a; ++i) {
      power *= l;
      for (std::size_t j = 0; j < prior; ++j) out.push_back(out[j] * power);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

unsigned valuation(std::uint64_t n, std::uint64_t l) {
  require_positive(n, "valuation");
  unsigned v = 0;
  while (n % l == 0) {
    n /= l;
    ++v;
  }
  return v;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) {
    throw std::overflow_error("64-bit overflow in divisor arithmetic");
  }
  return a * b;
}

std::uint64_t checked_pow(std::uint64_t base, unsigned exponent) {
  std::uint64_t out = 1;
  for (unsigned i = 0; i < exponent; ++i) out = checked_mul(out, base);
  return out;
}

std::uint64_t euler_phi(std::uint64_t n) {
  require_positive(n, "euler_phi");
  std::uint64_t out = n;
  for (auto [l, a] : factorize(n)) out = out / l * (l - 1);
  return out;
}

int moebius(std::uint64_t n) {
  require_positive(n, "moebius");
  int out = 1;
  for (auto [l, a] : factorize(n)) {
    if (a > 1) return 0;
    out = -out;
  }
  return out;
}

std::uint64_t psi(std::uint64_t n) {
  require_positive(n, "psi");
  std::uint64_t out = 1;
  for (auto [l, a] : factorize(n)) {
    out = checked_mul(out, (l - 2) * checked_pow(l, a - 1));
  }
  return out;
}

int delta_de(std::uint64_t d, std::uint64_t e, const PrimePower& q) {
  if (d <= 1 || e <= 1) throw std::invalid_argument("delta_de: d and e must exceed 1");
  if ((q.q + 1) % d != 0) throw std::invalid_argument("delta_de: d must divide q + 1");
  if ((q.q - 1) % e != 0) throw std::invalid_argument("delta_de: e must divide q - 1");
  if (d % 2 == 1) return 1;
  return ((q.q - 1) / 2) % e == 0 ? 0 : 2;
}

bool satisfies_sg_condition(const DivisorTriple& t) {
  if (!(t.d >= t.e && t.e >= t.f && t.f > 1)) return false;
  const auto m = std::lcm(t.d, t.e);
  return m == std::lcm(t.d, t.f) && m == std::lcm(t.e, t.f);
}

HHSplit hH_split(std::uint64_t d, std::uint64_t e, std::uint64_t f) {
  if (!satisfies_sg_condition({d, e, f})) {
    throw std::invalid_argument("hH_split: not a valid divisor triple");
  }
  const std::uint64_t m = std::lcm(d, e);
  const std::uint64_t product = checked_mul(checked_mul(d, e), f);
  const std::uint64_t m2 = checked_mul(m, m);
  if (product % m2 != 0) throw std::invalid_argument("hH_split: m^2 does not divide def");

  HHSplit out;
  for (auto [l, a] : factorize(product / m2)) {
    const unsigned vm = valuation(m, l);
    if (a > vm) {
      throw std::invalid_argument("hH_split: prime exponent exceeds its valuation in lcm(d,e)");
    }
    const std::uint64_t part = checked_pow(l, a);
    if (a == vm) {
      out.H *= part;
    } else {
      out.h *= part;
    }
  }
  return out;
}

std::vector<DivisorTriple> enumerate_sg(const PrimePower& q) {
  std::vector<DivisorTriple> out;
  const auto divs = divisors(q.q - 1);
  for (auto d : divs) {
    for (auto e : divs) {
      for (auto f : divs) {
        DivisorTriple t{d, e, f};
        if (satisfies_sg_condition(t)) out.push_back(t);
      }
    }
  }
  return out;
}

}  // namespace numtheory
}  // namespace orbital
