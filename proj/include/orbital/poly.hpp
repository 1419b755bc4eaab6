#pragma once

// Dense univariate polynomials over a finite coefficient field, stored
// low-degree first with no trailing zeros (the zero polynomial is empty).
//
// Field requirements: Elem type, zero(), one(), add, sub, mul, inv,
// size() (number of elements) and element(k) for 0 <= k < size(),
// enumerating the field in its canonical order with element(0) = zero().

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace orbital::poly {

template <class Field>
using Poly = std::vector<typename Field::Elem>;

template <class Field>
void trim(const Field& F, Poly<Field>& a) {
  while (!a.empty() && a.back() == F.zero()) a.pop_back();
}

template <class Field>
long degree(const Poly<Field>& a) {
  return static_cast<long>(a.size()) - 1;
}

template <class Field>
Poly<Field> sub(const Field& F, const Poly<Field>& a, const Poly<Field>& b) {
  Poly<Field> out(std::max(a.size(), b.size()), F.zero());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = F.sub(out[i], b[i]);
  trim(F, out);
  return out;
}

template <class Field>
Poly<Field> mul(const Field& F, const Poly<Field>& a, const Poly<Field>& b) {
  if (a.empty() || b.empty()) return {};
  Poly<Field> out(a.size() + b.size() - 1, F.zero());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == F.zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = F.add(out[i + j], F.mul(a[i], b[j]));
  }
  trim(F, out);
  return out;
}

/// Remainder of a modulo a nonzero m.
template <class Field>
Poly<Field> mod(const Field& F, Poly<Field> a, const Poly<Field>& m) {
  if (m.empty()) throw std::domain_error("poly::mod: zero modulus");
  trim(F, a);
  const auto lead_inv = F.inv(m.back());
  while (a.size() >= m.size()) {
    const auto c = F.mul(a.back(), lead_inv);
    const std::size_t shift = a.size() - m.size();
    for (std::size_t i = 0; i < m.size(); ++i) a[shift + i] = F.sub(a[shift + i], F.mul(c, m[i]));
    trim(F, a);
  }
  return a;
}

template <class Field>
Poly<Field> mul_mod(const Field& F, const Poly<Field>& a, const Poly<Field>& b, const Poly<Field>& m) {
  return mod(F, mul(F, a, b), m);
}

/// a^k mod m for a machine-word exponent.
template <class Field>
Poly<Field> pow_mod(const Field& F, Poly<Field> a, std::uint64_t k, const Poly<Field>& m) {
  Poly<Field> result = mod(F, Poly<Field>{F.one()}, m);
  a = mod(F, std::move(a), m);
  while (k != 0) {
    if (k & 1U) result = mul_mod(F, result, a, m);
    k >>= 1;
    if (k != 0) a = mul_mod(F, a, a, m);
  }
  return result;
}

template <class Field>
Poly<Field> monic_gcd(const Field& F, Poly<Field> a, Poly<Field> b) {
  trim(F, a);
  trim(F, b);
  while (!b.empty()) {
    auto r = mod(F, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const auto inv = F.inv(a.back());
    for (auto& c : a) c = F.mul(c, inv);
  }
  return a;
}

/// Ben-Or test: f (degree >= 1) is irreducible iff gcd(x^{|F|^i} - x, f) = 1
/// for 1 <= i <= deg(f)/2.
template <class Field>
bool is_irreducible(const Field& F, const Poly<Field>& f) {
  const long n = degree<Field>(f);
  if (n < 1) return false;
  if (n == 1) return true;
  const Poly<Field> x{F.zero(), F.one()};
  Poly<Field> h = mod(F, x, f);
  for (long i = 1; i <= n / 2; ++i) {
    h = pow_mod(F, h, F.size(), f);
    const auto g = monic_gcd(F, sub(F, h, x), f);
    if (degree<Field>(g) > 0) return false;
  }
  return true;
}

/// The smallest monic irreducible polynomial of the given degree, comparing
/// coefficient tuples (c_0, c_1, ..., c_{n-1}) lexicographically in the
/// field's element order.
template <class Field>
Poly<Field> smallest_irreducible(const Field& F, unsigned n) {
  if (n == 0) throw std::invalid_argument("smallest_irreducible: degree must be positive");
  const std::uint64_t size = F.size();
  std::vector<std::uint64_t> index(n, 0);  // index[i] selects c_i
  if (n >= 2) index[0] = 1;                 // c_0 = 0 means x divides f
  for (;;) {
    Poly<Field> f(n + 1, F.zero());
    for (unsigned i = 0; i < n; ++i) f[i] = F.element(index[i]);
    f[n] = F.one();
    if (is_irreducible(F, f)) return f;
    // Advance the tuple; c_{n-1} varies fastest.
    int pos = static_cast<int>(n) - 1;
    while (pos >= 0 && ++index[pos] == size) index[pos--] = 0;
    if (pos < 0) throw std::logic_error("smallest_irreducible: exhausted candidates");
  }
}

}  // namespace orbital::poly
