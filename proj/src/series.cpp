#include "orbital/series.hpp"

#include <stdexcept>
#include <string>

namespace orbital {

namespace {

void require_same_order(const Series& a, const Series& b, const char* op) {
  if (a.order() != b.order()) {
    throw std::invalid_argument(std::string(op) + ": truncation orders differ (" +
                                std::to_string(a.order()) + " vs " + std::to_string(b.order()) + ")");
  }
}

}  // namespace

Series::Series(std::size_t order) : coefficients_(order + 1) {}

Series::Series(std::vector<Rational> coefficients) : coefficients_(std::move(coefficients)) {
  if (coefficients_.empty()) throw std::invalid_argument("Series: empty coefficient list");
}

Series Series::one(std::size_t order) { return monomial(order, 0); }

Series Series::monomial(std::size_t order, std::size_t k, const Rational& c) {
  Series out(order);
  if (k <= order) out.coefficients_[k] = c;
  return out;
}

Series Series::from_list(std::size_t order, std::initializer_list<long> coefficients) {
  Series out(order);
  std::size_t i = 0;
  for (long c : coefficients) {
    if (i > order) break;
    out.coefficients_[i++] = c;
  }
  return out;
}

Series operator+(const Series& a, const Series& b) {
  require_same_order(a, b, "add");
  std::vector<Rational> c(a.coefficients());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += b[i];
  return Series(std::move(c));
}

Series operator-(const Series& a, const Series& b) {
  require_same_order(a, b, "sub");
  std::vector<Rational> c(a.coefficients());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] -= b[i];
  return Series(std::move(c));
}

Series operator-(const Series& a) { return Rational(-1) * a; }

Series operator*(const Series& a, const Series& b) { return mul(a, b); }

Series operator*(const Rational& c, const Series& a) {
  std::vector<Rational> out(a.coefficients());
  for (auto& x : out) x *= c;
  return Series(std::move(out));
}

Series mul(const Series& a, const Series& b) {
  require_same_order(a, b, "mul");
  const std::size_t T = a.order();
  std::vector<Rational> c(T + 1);
  for (std::size_t i = 0; i <= T; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; i + j <= T; ++j) {
      if (b[j] != 0) c[i + j] += a[i] * b[j];
    }
  }
  return Series(std::move(c));
}

Series div(const Series& a, const Series& b) {
  require_same_order(a, b, "div");
  if (b[0] == 0) throw std::domain_error("div: divisor has zero constant term");
  const std::size_t T = a.order();
  const Rational inv_b0 = 1 / b[0];
  std::vector<Rational> c(T + 1);
  for (std::size_t n = 0; n <= T; ++n) {
    Rational acc = a[n];
    for (std::size_t k = 1; k <= n; ++k) {
      if (b[k] != 0) acc -= b[k] * c[n - k];
    }
    c[n] = acc * inv_b0;
  }
  return Series(std::move(c));
}

Series substitute_power(const Series& a, std::size_t d) {
  if (d == 0) throw std::invalid_argument("substitute_power: d must be positive");
  const std::size_t T = a.order();
  std::vector<Rational> c(T + 1);
  for (std::size_t k = 0; k * d <= T; ++k) c[k * d] = a[k];
  return Series(std::move(c));
}

Series pow(const Series& a, long k) {
  if (k < 0) {
    if (a[0] == 0) throw std::domain_error("pow: negative power of a series with zero constant term");
    return pow(div(Series::one(a.order()), a), -k);
  }
  Series result = Series::one(a.order());
  Series base = a;
  auto e = static_cast<unsigned long>(k);
  while (e != 0) {
    if (e & 1UL) result = mul(result, base);
    e >>= 1;
    if (e != 0) base = mul(base, base);
  }
  return result;
}

Series exp(const Series& a) {
  if (a[0] != 0) throw std::domain_error("exp: constant term must be zero");
  const std::size_t T = a.order();
  std::vector<Rational> b(T + 1);
  b[0] = 1;
  for (std::size_t n = 1; n <= T; ++n) {
    Rational acc = 0;
    for (std::size_t k = 1; k <= n; ++k) {
      if (a[k] != 0) acc += Rational(static_cast<unsigned long>(k)) * a[k] * b[n - k];
    }
    b[n] = acc / Rational(static_cast<unsigned long>(n));
  }
  return Series(std::move(b));
}

const Rational& coeff(const Series& a, std::size_t n) {
  if (n > a.order()) {
    throw std::out_of_range("coeff: index " + std::to_string(n) + " exceeds truncation order " +
                            std::to_string(a.order()));
  }
  return a[n];
}

Series with_order(const Series& a, std::size_t order) {
  std::vector<Rational> c(order + 1);
  for (std::size_t i = 0; i <= order && i <= a.order(); ++i) c[i] = a[i];
  return Series(std::move(c));
}

bool has_nonnegative_integer_coefficients(const Series& a) {
  for (const auto& c : a.coefficients()) {
    if (!is_integer(c) || c < 0) return false;
  }
  return true;
}

}  // namespace orbital
