#include "doctest.h"

#include "orbital/numtheory.hpp"
#include "orbital/strata.hpp"

using namespace orbital;

namespace {

const Stratum P1 = Stratum::proj(1);
const Stratum P2 = Stratum::proj(2);
const Stratum A1 = Stratum::affine(1);

Integer binom(const Integer& n, unsigned long k) {
  Integer r;
  mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), k);
  return r;
}

// Sum over s_1 + 2 s_2 + ... = n of prod C(b_r, s_r) (sets) or
// prod C(b_r + s_r - 1, s_r) (multisets), by direct recursion on r.
Integer partition_sum(const std::vector<Integer>& b, unsigned r, unsigned left, bool multiset) {
  if (left == 0) return 1;
  if (r > left) return 0;
  Integer total = 0;
  for (unsigned s = 0; s * r <= left; ++s) {
    const Integer ways = multiset ? (s == 0 ? Integer(1) : binom(b[r] + s - 1, s)) : binom(b[r], s);
    if (ways == 0) break;
    total += ways * partition_sum(b, r + 1, left - s * r, multiset);
  }
  return total;
}

}  // namespace

TEST_CASE("catalog names round trip") {
  CHECK(catalog().size() == 13);
  for (const auto& s : catalog()) CHECK(Stratum::parse(s.name()) == s);
  CHECK(Stratum::parse("affine3") == Stratum::affine(3));
  CHECK(Stratum::parse("proj2_minus_deg3_orbit") == Stratum::of(StratumKind::proj2_minus_deg3_orbit));
  CHECK_FALSE(Stratum::parse("nope").has_value());
}

TEST_CASE("point_count") {
  for (std::uint64_t q = 2; q <= 9; ++q) {
    CHECK(point_count(P2, q, 1) == q * q + q + 1);
    CHECK(point_count(Stratum::of(StratumKind::affine2_minus_two_lines), q, 1) == (q - 1) * (q - 1));
  }
  CHECK(point_count(Stratum::of(StratumKind::proj1_minus_deg2_orbit), 3, 1) == 4);
  CHECK(point_count(Stratum::of(StratumKind::proj1_minus_deg2_orbit), 3, 2) == 8);
  CHECK(point_count(Stratum::of(StratumKind::proj2_minus_deg3_orbit), 2, 3) == 73 - 3);
  CHECK_THROWS(point_count(P1, 2, 0));
}

TEST_CASE("orbit_counts") {
  const auto b = orbit_counts(P1, 2, 2).b;
  CHECK(b[1] == 3);
  CHECK(b[2] == 1);
  for (std::uint64_t q = 2; q <= 9; ++q) CHECK(orbit_counts(A1, q, 1).b[1] == q);
  const auto v1 = orbit_counts(Stratum::of(StratumKind::proj1_minus_deg2_orbit), 2, 2).b;
  CHECK(v1[1] == 3);
  CHECK(v1[2] == 0);
  for (const auto& s : catalog())
    for (std::uint64_t q = 2; q <= 5; ++q) {
      const auto c = orbit_counts(s, q, 12).b;
      for (unsigned r = 1; r <= 12; ++r) CHECK(c[r] * r <= point_count(s, q, r));
    }
}

TEST_CASE("f_series and fbar_series") {
  for (std::uint64_t q = 2; q <= 9; ++q) {
    for (const auto& s : catalog()) {
      CHECK(coeff(f_series(s, q, 4), 0) == 1);
      CHECK(coeff(fbar_series(s, q, 4), 0) == 1);
    }
    const Integer Q(static_cast<unsigned long>(q));
    CHECK(coeff(f_series(A1, q, 3), 2) == Q * Q - Q);
    CHECK(coeff(f_series(P1, q, 4), 3) == Q * Q * Q - Q);
    const auto fbar = fbar_series(A1, q, 8);
    for (unsigned n = 0; n <= 8; ++n) CHECK(coeff(fbar, n) == ipow(Q, n));
  }
  // multichoose(3, 2) + b_2 = 6 + 1
  CHECK(coeff(fbar_series(P1, 2, 2), 2) == 7);
}

TEST_CASE("monic polynomials are multisets of monic irreducibles") {
  for (std::uint64_t p : {2, 3, 5}) {
    // Gauss: d I_d = sum_{k | d} mu(k) p^{d/k}
    std::vector<Integer> irreducible(7, 0);
    for (unsigned d = 1; d <= 6; ++d) {
      Integer s = 0;
      for (auto k : numtheory::divisors(d)) s += numtheory::moebius(k) * ipow(Integer(static_cast<unsigned long>(p)), d / k);
      irreducible[d] = s / d;
    }
    const auto fbar = fbar_series(A1, p, 6);
    for (unsigned n = 0; n <= 6; ++n) CHECK(coeff(fbar, n) == partition_sum(irreducible, 1, n, true));
  }
}

TEST_CASE("partition-sum oracle") {
  for (const auto& s : catalog())
    for (std::uint64_t q = 2; q <= 7; ++q) {
      const auto b = orbit_counts(s, q, 10).b;
      const auto f = f_series(s, q, 10);
      const auto fbar = fbar_series(s, q, 10);
      for (unsigned n = 0; n <= 10; ++n) {
        REQUIRE(coeff(f, n) == partition_sum(b, 1, n, false));
        REQUIRE(coeff(fbar, n) == partition_sum(b, 1, n, true));
      }
    }
}

TEST_CASE("closed_coeff") {
  for (std::uint64_t q = 2; q <= 9; ++q) {
    const Integer Q(static_cast<unsigned long>(q));
    CHECK(closed_coeff(Stratum::affine_minus_point(1), q, 1) == Q - 1);
    CHECK(closed_coeff(P2, q, 2) == Q * Q * Q * Q + Q * Q * Q + Q * Q);
  }
  CHECK(closed_coeff(Stratum::of(StratumKind::proj2_minus_three_rational_points), 2, 1) == 4);
  CHECK_THROWS_AS(closed_coeff(Stratum::proj(3), 2, 5), std::invalid_argument);
}

TEST_CASE("proj_coeff_general") {
  for (std::uint64_t q = 2; q <= 7; ++q) {
    const Integer Q(static_cast<unsigned long>(q));
    CHECK(proj_coeff_general(1, q, 3) == Q * Q * Q - Q);
    CHECK(proj_coeff_general(2, q, 4) ==
          (ipow(Q, 6) + ipow(Q, 5) + ipow(Q, 4) - Q * Q - Q - 1) * Q * Q);
  }
  CHECK(proj_coeff_general(3, 2, 5) == coeff(f_series(Stratum::proj(3), 2, 5), 5));
  CHECK_THROWS(proj_coeff_general(2, 3, 3));
}

TEST_CASE("series routes agree") {
  for (const auto& s : catalog())
    for (std::uint64_t q = 2; q <= 5; ++q)
      for (bool multiset : {false, true})
        REQUIRE(gf_series(s, q, 16, multiset) == gf_series_from_orbits(s, q, 16, multiset));
}
