#pragma once

// Generating functions of t_N(n) and its multiset variant for N = 1, 2,
// assembled type by type from the stratum series. Terms are exact rationals;
// only their sum is guaranteed integral.

#include "orbital/bigint.hpp"
#include "orbital/numtheory.hpp"
#include "orbital/series.hpp"

#include <string>
#include <utility>
#include <vector>

namespace orbital {

struct TermBreakdown {
  /// (label, series) in label order: "A".."D" for N = 1, "A".."H" for N = 2.
  std::vector<std::pair<std::string, Series>> terms;

  Series total() const;
  const Series& term(const std::string& label) const;
};

TermBreakdown t1_series(const PrimePower& q, std::size_t T, bool multiset);
TermBreakdown t2_series(const PrimePower& q, std::size_t T, bool multiset);
TermBreakdown t_series(unsigned dim, const PrimePower& q, std::size_t T, bool multiset);

/// Closed polynomial for t_2(7), with every bracket [v]_{cond} evaluated.
Integer t2_closed_7(const PrimePower& q);

struct CountRequest {
  unsigned dim = 1;
  PrimePower q;
  unsigned n = 0;
  bool multiset = false;
};

/// Truncation order used for a request: max(n, 8).
std::size_t truncation_for(const CountRequest& req);

/// Coefficient n of the total series. Throws std::logic_error if it is not a
/// nonnegative integer, std::invalid_argument on a bad dimension.
Integer count(const CountRequest& req);

/// Term series for the request (at truncation_for(req)).
TermBreakdown breakdown(const CountRequest& req);

}  // namespace orbital
