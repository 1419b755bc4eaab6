#pragma once

#include <gmpxx.h>

#include <string>

namespace orbital {

using Integer = mpz_class;
using Rational = mpq_class;

Integer ipow(const Integer& base, unsigned long exponent);
Rational rpow(const Rational& base, long exponent);

bool is_integer(const Rational& x);

/// Exact conversion; throws std::domain_error if x has a nontrivial denominator.
Integer to_integer(const Rational& x);

/// "n" for integers, "n/d" otherwise.
std::string to_string(const Rational& x);
std::string to_string(const Integer& x);

}  // namespace orbital
