#include "orbital/bigint.hpp"

#include <stdexcept>

namespace orbital {

Integer ipow(const Integer& base, unsigned long exponent) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
  return out;
}

Rational rpow(const Rational& base, long exponent) {
  if (exponent >= 0) {
    Rational out(ipow(base.get_num(), static_cast<unsigned long>(exponent)),
                 ipow(base.get_den(), static_cast<unsigned long>(exponent)));
    out.canonicalize();
    return out;
  }
  if (base == 0) throw std::domain_error("rpow: zero to a negative power");
  return 1 / rpow(base, -exponent);
}

bool is_integer(const Rational& x) { return x.get_den() == 1; }

Integer to_integer(const Rational& x) {
  if (!is_integer(x)) {
    throw std::domain_error("expected an integer, got " + x.get_str());
  }
  return x.get_num();
}

std::string to_string(const Rational& x) { return x.get_str(); }
std::string to_string(const Integer& x) { return x.get_str(); }

}  // namespace orbital
