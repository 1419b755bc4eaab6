#include "doctest.h"

#include "orbital/counting.hpp"
#include "orbital/oracle.hpp"

using namespace orbital;

namespace {

PrimePower pp(std::uint64_t q) { return PrimePower::from_q(q); }

}  // namespace

TEST_CASE("t1_series") {
  for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9, 16}) {
    for (bool multiset : {false, true}) CHECK(coeff(t1_series(pp(q), 4, multiset).total(), 1) == 1);
  }
  CHECK(coeff(t1_series(pp(2), 6, false).total(), 3) == 3);
  const auto b = t1_series(pp(2), 10, false);
  CHECK(b.term("C") == Series(10));
  CHECK(b.terms.size() == 4);
  CHECK_THROWS(b.term("E"));
}

TEST_CASE("t2_series") {
  for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9}) {
    for (bool multiset : {false, true}) CHECK(coeff(t2_series(pp(q), 4, multiset).total(), 1) == 1);
  }
  CHECK(t2_series(pp(3), 8, false).terms.size() == 8);
  // q = 2 against the brute-force count
  const oracle::BurnsideContext ctx(2, pp(2), 5);
  const auto table = oracle::burnside_table(ctx);
  const auto sets = t2_series(pp(2), 8, false).total();
  const auto multisets = t2_series(pp(2), 8, true).total();
  for (unsigned n = 0; n <= 5; ++n) {
    CHECK(coeff(sets, n) == table.sets[n]);
    CHECK(coeff(multisets, n) == table.multisets[n]);
  }
}

TEST_CASE("t2_closed_7") {
  CHECK(t2_closed_7(pp(2)) == 223);
  for (std::uint64_t q : {3, 4}) CHECK(t2_closed_7(pp(q)) == coeff(t2_series(pp(q), 8, false).total(), 7));
  CHECK(count({2, pp(3), 7, false}) == t2_closed_7(pp(3)));
}

TEST_CASE("count") {
  CHECK(count({1, pp(2), 0, false}) == 1);
  CHECK(count({1, pp(2), 2, false}) == 2);
  CHECK(count({2, pp(2), 1, true}) == 1);
  CHECK(truncation_for({1, pp(2), 3, false}) == 8);
  CHECK(truncation_for({1, pp(2), 30, false}) == 30);
  CHECK_THROWS_AS(count({3, pp(2), 1, false}), std::invalid_argument);
}

TEST_CASE("breakdown sums to the count") {
  for (unsigned dim : {1U, 2U})
    for (std::uint64_t q : {2, 3, 4, 5})
      for (unsigned n = 0; n <= 9; ++n)
        for (bool multiset : {false, true}) {
          const CountRequest req{dim, pp(q), n, multiset};
          Rational sum = 0;
          for (const auto& [label, s] : breakdown(req).terms) sum += coeff(s, n);
          REQUIRE(sum == Rational(count(req)));
        }
}

TEST_CASE("sets versus multisets") {
  for (unsigned dim : {1U, 2U})
    for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9, 11, 13, 16})
      for (unsigned n = 0; n <= 14; ++n) {
        const auto sets = count({dim, pp(q), n, false});
        const auto multisets = count({dim, pp(q), n, true});
        REQUIRE(sets >= 1);
        REQUIRE(multisets >= sets);
      }
}
