#include "doctest.h"

#include "orbital/gfq.hpp"

#include <stdexcept>
#include <cmath>
#include <cstdlib>
#include <random>
#include <string>
#include <tuple>

using namespace orbital::gfq;

namespace {

using Coeffs = std::vector<std::uint32_t>;  // low degree first

// remainder of a by monic b over F_p
Coeffs rem(Coeffs a, const Coeffs& b, std::uint32_t p) {
  while (a.size() >= b.size()) {
    const std::uint32_t c = a.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = (a[shift + i] + (p - c) * b[i]) % p;
    a.pop_back();
    while (!a.empty() && a.back() == 0) a.pop_back();
  }
  return a;
}

// monic polynomial of degree n whose lower coefficients are the base-p digits of k
Coeffs monic(std::uint64_t k, unsigned n, std::uint32_t p) {
  Coeffs c(n + 1, 0);
  for (unsigned i = 0; i < n; ++i) {
    c[i] = static_cast<std::uint32_t>(k % p);
    k /= p;
  }
  c[n] = 1;
  return c;
}

bool irreducible_by_trial_division(const Coeffs& f, std::uint32_t p) {
  const unsigned n = static_cast<unsigned>(f.size() - 1);
  for (unsigned d = 1; d <= n / 2; ++d) {
    std::uint64_t count = 1;
    for (unsigned i = 0; i < d; ++i) count *= p;
    for (std::uint64_t k = 0; k < count; ++k)
      if (rem(f, monic(k, d, p), p).empty()) return false;
  }
  return true;
}

// smallest by (c_0, ..., c_{n-1}) lexicographically
Coeffs smallest_by_brute_force(std::uint32_t p, unsigned n) {
  std::uint64_t count = 1;
  for (unsigned i = 0; i < n; ++i) count *= p;
  for (std::uint64_t k = 0; k < count; ++k) {
    Coeffs c(n + 1, 0);
    std::uint64_t t = k;
    for (unsigned i = n; i-- > 0;) {  // c_0 is the most significant digit
      c[i] = static_cast<std::uint32_t>(t % p);
      t /= p;
    }
    c[n] = 1;
    if (irreducible_by_trial_division(c, p)) return c;
  }
  return {};
}

FieldElem iterate(const FieldTower& t, FieldElem x, unsigned times, bool full_q) {
  for (unsigned i = 0; i < times; ++i) x = full_q ? t.frobenius_q(x) : t.frobenius_p(x);
  return x;
}

}  // namespace

TEST_CASE("moduli") {
  CHECK(FieldTower(2, 1, 1).modulus() == Coeffs{0, 1});
  CHECK(FieldTower(2, 1, 2).modulus() == Coeffs{1, 1, 1});
  CHECK(FieldTower(3, 1, 2).modulus() == Coeffs{1, 0, 1});
  CHECK(FieldTower(2, 2, 1).modulus() == FieldTower(2, 1, 2).modulus());
  for (std::uint32_t p : {2U, 3U, 5U})
    for (unsigned n = 1; n <= (p == 2 ? 8U : 4U); ++n) {
      CAPTURE(p);
      CAPTURE(n);
      CHECK(FieldTower(p, 1, n).modulus() == smallest_by_brute_force(p, n));
    }
  CHECK_THROWS_AS(FieldTower(4, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(FieldTower(2, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(FieldTower(5, 1, 24), BudgetExceeded);
  CHECK_THROWS_AS(FieldTower(2, 1, 11, 10), BudgetExceeded);
}

TEST_CASE("field axioms and tables") {
  std::mt19937 rng(7);
  for (auto [p, e, r] : {std::tuple{2U, 1U, 4U}, {2U, 2U, 3U}, {3U, 1U, 3U}, {3U, 2U, 2U}, {5U, 1U, 2U}, {7U, 1U, 2U}}) {
    const FieldTower t(p, e, r);
    CHECK(t.size() == static_cast<std::uint64_t>(std::pow(p, e * r)));
    std::uniform_int_distribution<std::uint32_t> pick(0, static_cast<std::uint32_t>(t.size() - 1));
    for (int trial = 0; trial < 300; ++trial) {
      const FieldElem a{pick(rng)}, b{pick(rng)}, c{pick(rng)};
      REQUIRE(t.mul(a, b) == t.mul_slow(a, b));
      REQUIRE(t.add(a, b) == t.add_slow(a, b));
      REQUIRE(t.mul(t.mul(a, b), c) == t.mul(a, t.mul(b, c)));
      REQUIRE(t.add(t.add(a, b), c) == t.add(a, t.add(b, c)));
      REQUIRE(t.mul(a, t.add(b, c)) == t.add(t.mul(a, b), t.mul(a, c)));
      REQUIRE(t.add(a, t.neg(a)) == t.zero());
      if (a != t.zero()) REQUIRE(t.mul(a, t.inv(a)) == t.one());
      REQUIRE(t.frobenius_q(t.add(a, b)) == t.add(t.frobenius_q(a), t.frobenius_q(b)));
      REQUIRE(t.frobenius_q(t.mul(a, b)) == t.mul(t.frobenius_q(a), t.frobenius_q(b)));
      REQUIRE(t.frobenius_q(a) == iterate(t, a, e, false));
      REQUIRE(iterate(t, a, r, true) == a);
    }
    CHECK(t.frobenius_q(t.zero()) == t.zero());
    CHECK_THROWS_AS(t.inv(t.zero()), std::domain_error);

    // subfield sizes
    for (unsigned d = 1; d <= r; ++d) {
      if (r % d) continue;
      std::uint64_t fixed = 0;
      for (std::uint64_t x = 0; x < t.size(); ++x) fixed += iterate(t, {static_cast<std::uint32_t>(x)}, d, true).code == x;
      CHECK(fixed == static_cast<std::uint64_t>(std::pow(p, e * d)));
    }
  }
}

TEST_CASE("coordinates") {
  const FieldTower t(3, 1, 3);
  for (std::uint32_t x = 0; x < t.size(); ++x) CHECK(t.from_coordinates(t.coordinates({x})) == FieldElem{x});
  CHECK_THROWS(t.from_coordinates({1, 2}));
  CHECK_THROWS(t.from_coordinates({3, 0, 0}));
}

TEST_CASE("base field elements") {
  for (const FieldTower& t : {FieldTower(2, 2, 1), FieldTower(2, 1, 3), FieldTower(3, 2, 2), FieldTower(2, 2, 3)}) {
    const auto b = base_field_elements(t);
    CHECK(b.size() == t.base_size());
    for (auto x : b) CHECK(t.frobenius_q(x) == x);
  }
  CHECK(base_field_elements(FieldTower(2, 1, 3)) == std::vector<FieldElem>{{0}, {1}});
}

TEST_CASE("embedding is a field homomorphism") {
  for (auto [p, e, r] : {std::tuple{2U, 2U, 3U}, {2U, 2U, 4U}, {3U, 2U, 2U}, {2U, 3U, 2U}, {5U, 1U, 3U}}) {
    const FieldTower base(p, e, 1), ext(p, e, r);
    const auto emb = embed_base_field(base, ext);
    CHECK(emb[0] == ext.zero());
    CHECK(emb[1] == ext.one());
    for (std::uint32_t x = 0; x < base.size(); ++x) {
      CHECK(ext.frobenius_q(emb[x]) == emb[x]);
      for (std::uint32_t y = 0; y < base.size(); ++y) {
        REQUIRE(emb[base.add({x}, {y}).code] == ext.add(emb[x], emb[y]));
        REQUIRE(emb[base.mul({x}, {y}).code] == ext.mul(emb[x], emb[y]));
      }
    }
  }
  CHECK_THROWS(embed_base_field(FieldTower(2, 1, 2), FieldTower(2, 1, 4)));
}

TEST_CASE("budget from the environment") {
  const char* old = std::getenv("ORBITAL_MAX_FIELD_BITS");
  const std::string saved = old ? old : "";
  setenv("ORBITAL_MAX_FIELD_BITS", "12", 1);
  CHECK(max_field_bits() == 12);
  CHECK_THROWS_AS(FieldTower(2, 1, 13), BudgetExceeded);
  setenv("ORBITAL_MAX_FIELD_BITS", "zero", 1);
  CHECK_THROWS_AS(max_field_bits(), std::invalid_argument);
  if (old) setenv("ORBITAL_MAX_FIELD_BITS", saved.c_str(), 1);
  else unsetenv("ORBITAL_MAX_FIELD_BITS");
  CHECK(max_field_bits() == (old ? static_cast<unsigned>(std::stoi(saved)) : 26U));
}
