// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include "orbital/counting.hpp"
#include "orbital/oracle.hpp"
#include "orbital/strata.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

using namespace orbital;

namespace {

PrimePower pp(std::uint64_t q) { return PrimePower::from_q(q); }

// Returns an empty string on success, else a description of the first failure.
using Check = std::function<std::string(std::ostringstream& info)>;

template <class A, class B>
std::string mismatch(const std::string& where, const A& got, const B& want) {
  std::ostringstream s;
  s << where << ": got " << got << ", expected " << want;
  return s.str();
}

std::string formula_vs_oracle(unsigned dim, std::initializer_list<std::uint64_t> qs, unsigned nmax,
                              std::ostringstream& info) {
  std::size_t compared = 0;
  for (auto q : qs) {
    const oracle::BurnsideContext ctx(dim, pp(q), nmax);
    const auto table = oracle::burnside_table(ctx);
    for (unsigned n = 0; n <= nmax; ++n)
      for (bool multiset : {false, true}) {
        const Integer formula = count({dim, pp(q), n, multiset});
        const Integer brute = multiset ? table.multisets[n] : table.sets[n];
        if (formula != brute) {
          std::ostringstream where;
          where << "N=" << dim << " q=" << q << " n=" << n << (multiset ? " multisets" : " sets");
          return mismatch(where.str(), formula, brute);
        }
        ++compared;
      }
  }
  info << compared << " counts";
  return "";
}

std::string criterion1(std::ostringstream& info) { return formula_vs_oracle(1, {2, 3, 4, 5}, 8, info); }

std::string criterion2(std::ostringstream& info) { return formula_vs_oracle(2, {2, 3}, 5, info); }

std::string criterion3(std::ostringstream& info) {
  for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9, 11, 13}) {
    const Integer closed = t2_closed_7(pp(q));
    const Rational series = coeff(t2_series(pp(q), 8, false).total(), 7);
    if (Rational(closed) != series) return mismatch("q=" + std::to_string(q), closed, series);
  }
  info << "9 values of q";
  return "";
}

std::string criterion4(std::ostringstream& info) {
  std::size_t checked = 0;
  const auto run = [&](unsigned dim, std::uint64_t q, unsigned rmax) -> std::string {
    for (const auto& g : oracle::enumerate_pgl(dim, pp(q)))
      for (unsigned r = 1; r <= rmax; ++r) {
        const Integer qr = ipow(Integer(static_cast<unsigned long>(q)), r);
        const Integer want = (ipow(qr, dim + 1) - 1) / (qr - 1);
        const Integer got = oracle::quotient_point_count(g, pp(q), r);
        if (got != want) return mismatch("N=" + std::to_string(dim) + " q=" + std::to_string(q) + " r=" + std::to_string(r), got, want);
        ++checked;
      }
    return "";
  };
  for (std::uint64_t q : {2, 3, 4, 5})
    if (auto e = run(1, q, 4); !e.empty()) return e;
  if (auto e = run(2, 2, 3); !e.empty()) return e;
  info << checked << " (gamma, r) pairs";
  return "";
}

std::string criterion5(std::ostringstream& info) {
  std::size_t checked = 0;
  const auto run = [&](unsigned N, std::uint64_t q) -> std::string {
    const Integer want = ipow(Integer(static_cast<unsigned long>(q)), N);
    for (const auto& g : oracle::enumerate_gl(N, pp(q))) {
      const Integer got = oracle::affine_quotient_count(g, pp(q));
      if (got != want) return mismatch("N=" + std::to_string(N) + " q=" + std::to_string(q), got, want);
      ++checked;
    }
    return "";
  };
  for (std::uint64_t q : {2, 3, 4, 5})
    if (auto e = run(2, q); !e.empty()) return e;
  if (auto e = run(3, 2); !e.empty()) return e;
  info << checked << " matrices";
  return "";
}

std::string criterion6(std::ostringstream& info) {
  std::size_t checked = 0;
  for (const auto& s : catalog())
    for (std::uint64_t q = 2; q <= 9; ++q) {
      const auto f = f_series(s, q, 30);
      for (unsigned n = 0; n <= 30; ++n) {
        const Integer c = closed_coeff(s, q, n);
        if (Rational(c) != coeff(f, n))
          return mismatch(s.name() + " q=" + std::to_string(q) + " n=" + std::to_string(n), c, coeff(f, n));
        ++checked;
      }
    }
  for (unsigned N = 1; N <= 4; ++N)
    for (std::uint64_t q : {2, 3}) {
      const auto f = f_series(Stratum::proj(N), q, 20);
      for (unsigned n = N + 2; n <= 20; ++n) {
        const Integer c = proj_coeff_general(N, q, n);
        if (Rational(c) != coeff(f, n))
          return mismatch("proj" + std::to_string(N) + " q=" + std::to_string(q) + " n=" + std::to_string(n), c,
                          coeff(f, n));
        ++checked;
      }
    }
  info << checked << " coefficients";
  return "";
}

std::string criterion7(std::ostringstream& info) {
  std::size_t checked = 0;
  for (const auto& s : catalog())
    for (std::uint64_t q = 2; q <= 9; ++q) {
      if (f_series(s, q, 30) != gf_series_from_orbits(s, q, 30, false)) return s.name() + " q=" + std::to_string(q) + ": f";
      if (fbar_series(s, q, 30) != gf_series_from_orbits(s, q, 30, true))
        return s.name() + " q=" + std::to_string(q) + ": fbar";
      checked += 2;
    }
  info << checked << " series";
  return "";
}

std::string criterion8(std::ostringstream& info) {
  constexpr std::size_t T = 30;
  const auto x = [](std::size_t k) { return Series::one(T) + Series::monomial(T, k); };  // 1 + x^k
  for (std::uint64_t q = 2; q <= 9; ++q) {
    const auto f = [&](StratumKind k) { return f_series(Stratum::of(k), q, T); };
    const auto P1 = f_series(Stratum::proj(1), q, T);
    const auto P2 = f_series(Stratum::proj(2), q, T);
    const auto A1 = f_series(Stratum::affine(1), q, T);
    const auto A2 = f_series(Stratum::affine(2), q, T);
    const std::pair<Series, Series> identities[] = {
        {P2, f(StratumKind::proj2_minus_point) * x(1)},
        {P1, f(StratumKind::proj1_minus_deg2_orbit) * x(2)},
        {P2, f(StratumKind::proj2_minus_deg3_orbit) * x(3)},
        {P2, f(StratumKind::proj2_minus_three_rational_points) * pow(x(1), 3)},
        {P2, f(StratumKind::proj2_minus_point_and_deg2_orbit) * x(1) * x(2)},
        {A2, f(StratumKind::affine2_minus_line) * A1},
        {A2 * x(1), f(StratumKind::affine2_minus_two_lines) * A1 * A1},
    };
    for (std::size_t i = 0; i < std::size(identities); ++i)
      if (identities[i].first != identities[i].second)
        return "identity " + std::to_string(i + 1) + " fails at q=" + std::to_string(q);
  }
  info << "7 identities, 8 values of q";
  return "";
}

std::string criterion9(std::ostringstream& info) {
  std::size_t checked = 0;
  for (std::uint64_t q = 2; q <= 16; ++q) {
    if (!as_prime_power(q)) continue;
    for (unsigned dim : {1U, 2U})
      for (bool multiset : {false, true}) {
        const auto total = t_series(dim, pp(q), 20, multiset).total();
        for (unsigned n = 0; n <= 20; ++n) {
          const Rational& c = coeff(total, n);
          if (!is_integer(c) || c < 0) {
            std::ostringstream where;
            where << "N=" << dim << " q=" << q << " n=" << n << (multiset ? " multisets" : " sets") << ": " << c;
            return where.str();
          }
          ++checked;
        }
      }
  }
  info << checked << " coefficients";
  return "";
}

}  // namespace

int main() {
  const std::pair<const char*, Check> criteria[] = {
      {"1 formula = oracle, N=1, q in {2,3,4,5}, n <= 8", criterion1},
      {"2 formula = oracle, N=2, q in {2,3}, n <= 5", criterion2},
      {"3 closed t2(7) = series coefficient", criterion3},
      {"4 quotient point counts of P^N / gamma", criterion4},
      {"5 affine quotient counts equal q^N", criterion5},
      {"6 closed forms = series coefficients", criterion6},
      {"7 zeta-ratio series = orbit products", criterion7},
      {"8 complement identities", criterion8},
      {"9 integrality of total counts", criterion9},
  };
  int failures = 0;
  for (const auto& [name, check] : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::ostringstream info;
    std::string error;
    try {
      error = check(info);
    } catch (const std::exception& e) {
      error = std::string("exception: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (error.empty()) {
      std::cout << "PASS criterion " << name << " (" << info.str() << ", " << seconds << " s)" << std::endl;
    } else {
      ++failures;
      std::cout << "FAIL criterion " << name << ": " << error << std::endl;
    }
  }
  return failures == 0 ? 0 : 1;
}
