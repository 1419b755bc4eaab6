#include "orbital/counting.hpp"

#include "orbital/strata.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <tuple>

namespace orbital {

using numtheory::divisors;
using numtheory::euler_phi;
using numtheory::psi;

Series TermBreakdown::total() const {
  if (terms.empty()) throw std::logic_error("TermBreakdown: no terms");
  Series sum(terms.front().second.order());
  for (const auto& [label, s] : terms) sum = sum + s;
  return sum;
}

const Series& TermBreakdown::term(const std::string& label) const {
  for (const auto& [l, s] : terms) {
    if (l == label) return s;
  }
  throw std::out_of_range("TermBreakdown: no term " + label);
}

namespace {

Rational ratio(std::uint64_t num, std::uint64_t den) {
  Rational r(Integer(std::to_string(num)), Integer(std::to_string(den)));
  r.canonicalize();
  return r;
}

Rational big(std::uint64_t v) { return Rational(Integer(std::to_string(v))); }

// Series of a single stratum at x^d, memoized per (stratum, d) for one q, T and
// flag.
class StratumSeries {
 public:
  StratumSeries(std::uint64_t q, std::size_t T, bool multiset) : q_(q), T_(T), multiset_(multiset) {}

  Series at(const Stratum& s, std::uint64_t d) {
    auto key = std::make_tuple(static_cast<int>(s.kind), s.dim);
    auto it = base_.find(key);
    if (it == base_.end()) it = base_.emplace(key, gf_series(s, q_, T_, multiset_)).first;
    return substitute_power(it->second, d);
  }

  /// Generating function of one sigma-orbit of length k of fixed points:
  /// 1 + x^k for sets, 1/(1 - x^k) for multisets.
  Series point_orbit(std::size_t k) const {
    if (!multiset_) return Series::one(T_) + Series::monomial(T_, k);
    return div(Series::one(T_), Series::one(T_) - Series::monomial(T_, k));
  }

  std::size_t order() const { return T_; }

 private:
  std::uint64_t q_;
  std::size_t T_;
  bool multiset_;
  std::map<std::tuple<int, unsigned>, Series> base_;
};

const Stratum kA1 = Stratum::affine(1);
const Stratum kA2 = Stratum::affine(2);
const Stratum kA1MinusPoint = Stratum::affine_minus_point(1);
const Stratum kA2MinusPoint = Stratum::affine_minus_point(2);
const Stratum kA2MinusLine = Stratum::of(StratumKind::affine2_minus_line);
const Stratum kA2MinusTwoLines = Stratum::of(StratumKind::affine2_minus_two_lines);
const Stratum kP1 = Stratum::proj(1);
const Stratum kP2 = Stratum::proj(2);
const Stratum kV1 = Stratum::of(StratumKind::proj1_minus_deg2_orbit);
const Stratum kV2 = Stratum::of(StratumKind::proj2_minus_point);
const Stratum kV3 = Stratum::of(StratumKind::proj2_minus_deg3_orbit);
const Stratum kV4 = Stratum::of(StratumKind::proj2_minus_three_rational_points);
const Stratum kV5 = Stratum::of(StratumKind::proj2_minus_point_and_deg2_orbit);

bool divides(std::uint64_t d, std::uint64_t n) { return n % d == 0; }

}  // namespace

TermBreakdown t1_series(const PrimePower& pq, std::size_t T, bool multiset) {
  const std::uint64_t q = pq.q;
  StratumSeries f(q, T, multiset);
  const Series zero(T);
  TermBreakdown out;

  // A: irreducible semisimple, fixed points form one degree-2 orbit.
  Series a_sum = zero;
  for (auto d : divisors(q + 1)) {
    if (d == 1) continue;
    a_sum = a_sum + big(euler_phi(d)) * f.at(kV1, d);
  }
  out.terms.emplace_back("A", ratio(1, 2 * (q + 1)) * (f.point_orbit(2) * a_sum));

  // B: unipotent.
  out.terms.emplace_back("B", ratio(1, q) * (f.point_orbit(1) * f.at(kA1, pq.p)));

  // C: split semisimple diag(1, lambda).
  Series c_sum = zero;
  for (auto d : divisors(q - 1)) {
    if (d == 1) continue;
    c_sum = c_sum + big(euler_phi(d)) * f.at(kA1MinusPoint, d);
  }
  const Series two_points = f.point_orbit(1) * f.point_orbit(1);
  out.terms.emplace_back("C", ratio(1, 2 * (q - 1)) * (two_points * c_sum));

  // D: identity.
  out.terms.emplace_back("D", ratio(1, q * (q - 1) * (q + 1)) * f.at(kP1, 1));
  return out;
}

TermBreakdown t2_series(const PrimePower& pq, std::size_t T, bool multiset) {
  const std::uint64_t q = pq.q;
  const std::uint64_t p = pq.p;
  StratumSeries f(q, T, multiset);
  const Series zero(T);
  const Series pt = f.point_orbit(1);
  TermBreakdown out;

  // A: irreducible cubic block, fixed points form one degree-3 orbit.
  Series a_sum = zero;
  for (auto d : divisors(q * q + q + 1)) {
    if (d == 1) continue;
    a_sum = a_sum + big(euler_phi(d)) * f.at(kV3, d);
  }
  out.terms.emplace_back("A", ratio(1, 3 * (q * q + q + 1)) * (f.point_orbit(3) * a_sum));

  // B: diag(B_2, 1).
  Series b_sum = zero;
  for (auto d : divisors(q + 1)) {
    if (d == 1 || d % 2 == 0) continue;
    b_sum = b_sum + big(euler_phi(d)) * f.at(kV5, d);
  }
  for (auto d : divisors(q + 1)) {
    if (d == 1) continue;
    for (auto e : divisors(q - 1)) {
      if (e == 1) continue;
      const int delta = numtheory::delta_de(d, e, pq);
      if (delta == 0) continue;
      const Rational w = big(euler_phi(d)) * big(euler_phi(e)) * delta;
      b_sum = b_sum + w * (f.at(kV1, d) * f.at(kA2MinusPoint, d * e));
    }
  }
  out.terms.emplace_back("B", ratio(1, 2 * (q * q - 1)) * (pt * f.point_orbit(2) * b_sum));

  // C: regular unipotent.
  if (p > 2) {
    out.terms.emplace_back("C", ratio(1, q * q) * (pt * f.at(kV2, p)));
  } else {
    out.terms.emplace_back("C", ratio(1, q * q) * (pt * f.at(kA1, 2) * f.at(kA2, 4)));
  }

  // D: transvection.
  out.terms.emplace_back("D", ratio(1, q * q * q * (q - 1)) * (f.at(kP1, 1) * f.at(kA2, p)));

  // E: diag(J_2, lambda).
  Series e_sum = zero;
  for (auto d : divisors(q - 1)) {
    if (d == 1) continue;
    e_sum = e_sum + big(euler_phi(d)) * (f.at(kA1MinusPoint, d) * f.at(kA2MinusLine, p * d));
  }
  out.terms.emplace_back("E", ratio(1, q * (q - 1)) * (pt * pt * f.at(kA1, p) * e_sum));

  // F: homology diag(1, 1, lambda).
  Series f_sum = zero;
  for (auto d : divisors(q - 1)) {
    if (d == 1) continue;
    f_sum = f_sum + big(euler_phi(d)) * f.at(kA2MinusPoint, d);
  }
  out.terms.emplace_back("F", ratio(1, q * (q - 1) * (q - 1) * (q + 1)) * (pt * f.at(kP1, 1) * f_sum));

  // G: diag(1, lambda, mu) with three distinct eigenvalues.
  Series g_sum = zero;
  for (const auto& t : numtheory::enumerate_sg(pq)) {
    const std::uint64_t m = std::lcm(t.d, t.e);
    const Rational phi_m = big(euler_phi(m));
    if (t.d == t.e && t.e == t.f) {
      g_sum = g_sum + (ratio(1, 6) * phi_m * big(psi(m))) * f.at(kV4, m);
      continue;
    }
    const auto split = numtheory::hH_split(t.d, t.e, t.f);
    const Rational w = phi_m * big(euler_phi(split.h)) * big(psi(split.H));
    if (t.d == t.e) {
      g_sum = g_sum + (ratio(1, 2) * w) * (f.at(kA1MinusPoint, t.f) * f.at(kA2MinusPoint, m));
    } else {
      g_sum = g_sum + w * (f.at(kA1MinusPoint, t.d) * f.at(kA1MinusPoint, t.e) *
                           f.at(kA1MinusPoint, t.f) * f.at(kA2MinusTwoLines, m));
    }
  }
  out.terms.emplace_back("G", ratio(1, (q - 1) * (q - 1)) * (pt * pt * pt * g_sum));

  // H: identity.
  out.terms.emplace_back(
      "H", ratio(1, q * q * q * (q * q + q + 1) * (q - 1) * (q - 1) * (q + 1)) * f.at(kP2, 1));
  return out;
}

TermBreakdown t_series(unsigned dim, const PrimePower& q, std::size_t T, bool multiset) {
  if (dim == 1) return t1_series(q, T, multiset);
  if (dim == 2) return t2_series(q, T, multiset);
  throw std::invalid_argument("dimension must be 1 or 2");
}

Integer t2_closed_7(const PrimePower& pq) {
  const Integer q(std::to_string(pq.q));
  const std::uint64_t qq = pq.q;
  const auto bracket = [](bool cond, const Integer& v) { return cond ? v : Integer(0); };
  Integer v;
  if (pq.p > 2) {
    v = q * q * q * q * q * q + q * q * q * q * q + 3 * q * q * q * q + 6 * q * q * q + 11 * q * q + 4 * q;
    v += bracket(divides(3, qq - 1), 2 * (q * q + 6 * q + 9));
    v += bracket(divides(5, qq + 1), 4);
    v += bracket(divides(5, qq - 1), 20);
    v += bracket(divides(4, qq - 1), 4 * q + 6);
    v += bracket(divides(7, qq - 1), 8);
    v += bracket(divides(7, qq + 1), 6);
    v += bracket(divides(12, qq - 1), 4);
    v += bracket(divides(7, qq * qq + qq + 1), 2);
    v += bracket(divides(3, qq), q * q + 4 * q - 1);
    v += bracket(divides(3, qq) && divides(4, qq - 1), 2);
    v += bracket(divides(5, qq), 3);
    v += bracket(divides(7, qq), 2);
  } else {
    v = q * q * q * q * q * q + q * q * q * q * q + 3 * q * q * q * q + 6 * q * q * q + 8 * q * q - 1;
    v += bracket(divides(3, qq - 1), 2 * (q * q + 6 * q + 4));
    v += bracket(divides(5, qq + 1), 4);
    v += bracket(divides(5, qq - 1), 20);
    v += bracket(divides(7, qq - 1), 6);
  }
  return v;
}

std::size_t truncation_for(const CountRequest& req) { return std::max<std::size_t>(req.n, 8); }

TermBreakdown breakdown(const CountRequest& req) {
  return t_series(req.dim, req.q, truncation_for(req), req.multiset);
}

Integer count(const CountRequest& req) {
  const Series total = breakdown(req).total();
  const Rational& c = coeff(total, req.n);
  if (!is_integer(c) || c < 0) {
    throw std::logic_error("count: total coefficient " + c.get_str() + " is not a nonnegative integer");
  }
  return c.get_num();
}

}  // namespace orbital
