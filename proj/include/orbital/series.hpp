#pragma once

// Formal power series with exact rational coefficients, truncated at a fixed
// order T. Every binary operation requires both operands to carry the same
// order; reading a coefficient past T is an error, never a silent zero.

#include "orbital/bigint.hpp"

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace orbital {

class Series {
 public:
  /// The zero series of order T.
  explicit Series(std::size_t order);
  /// Coefficients 0..T; must be non-empty.
  explicit Series(std::vector<Rational> coefficients);

  static Series one(std::size_t order);
  /// c * x^k, or zero if k > order.
  static Series monomial(std::size_t order, std::size_t k, const Rational& c = 1);
  /// Leading coefficients from a list, padded with zeros (extra terms truncated).
  static Series from_list(std::size_t order, std::initializer_list<long> coefficients);

  std::size_t order() const { return coefficients_.size() - 1; }
  const std::vector<Rational>& coefficients() const { return coefficients_; }
  /// Unchecked access; use coeff() at API boundaries.
  const Rational& operator[](std::size_t n) const { return coefficients_[n]; }

  bool operator==(const Series& other) const = default;

 private:
  std::vector<Rational> coefficients_;
};

Series operator+(const Series& a, const Series& b);
Series operator-(const Series& a, const Series& b);
Series operator-(const Series& a);
Series operator*(const Series& a, const Series& b);
Series operator*(const Rational& c, const Series& a);

/// Cauchy product truncated at T.
Series mul(const Series& a, const Series& b);
/// The unique c with b*c = a mod x^(T+1); b(0) must be nonzero.
Series div(const Series& a, const Series& b);
/// a(x^d), d >= 1.
Series substitute_power(const Series& a, std::size_t d);
/// a^k by repeated squaring; negative k inverts first.
Series pow(const Series& a, long k);
/// exp(a) for a(0) = 0, via n b_n = sum_k k a_k b_{n-k}.
Series exp(const Series& a);
/// Coefficient of x^n; std::out_of_range when n > T.
const Rational& coeff(const Series& a, std::size_t n);

/// Same series at a different truncation order (zero-padded when raising).
Series with_order(const Series& a, std::size_t order);

/// True iff every coefficient is an integer >= 0.
bool has_nonnegative_integer_coefficients(const Series& a);

}  // namespace orbital
