#include "orbital/strata.hpp"

#include "orbital/numtheory.hpp"

#include <charconv>
#include <stdexcept>

namespace orbital {

namespace {

struct FixedName {
  StratumKind kind;
  const char* name;
};

constexpr FixedName kFixedNames[] = {
    {StratumKind::affine2_minus_line, "affine2_minus_line"},
    {StratumKind::affine2_minus_two_lines, "affine2_minus_two_lines"},
    {StratumKind::proj1_minus_deg2_orbit, "proj1_minus_deg2_orbit"},
    {StratumKind::proj2_minus_point, "proj2_minus_point"},
    {StratumKind::proj2_minus_deg3_orbit, "proj2_minus_deg3_orbit"},
    {StratumKind::proj2_minus_three_rational_points, "proj2_minus_three_rational_points"},
    {StratumKind::proj2_minus_point_and_deg2_orbit, "proj2_minus_point_and_deg2_orbit"},
};

std::optional<unsigned> parse_dim(std::string_view digits) {
  unsigned n = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
  if (ec != std::errc() || ptr != digits.data() + digits.size() || n == 0) return std::nullopt;
  return n;
}

Integer big(std::uint64_t q) { return Integer(std::to_string(q)); }

Integer proj_points(std::uint64_t q, unsigned N, unsigned r) {
  // 1 + q^r + ... + q^{rN}
  const Integer qr = ipow(big(q), r);
  Integer out = 0;
  Integer term = 1;
  for (unsigned i = 0; i <= N; ++i) {
    out += term;
    term *= qr;
  }
  return out;
}

Integer indicator(bool c) { return c ? 1 : 0; }

Rational sign(long k) { return (k % 2 == 0) ? 1 : -1; }

}  // namespace

Stratum Stratum::of(StratumKind kind) {
  switch (kind) {
    case StratumKind::affine:
    case StratumKind::affine_minus_point:
    case StratumKind::proj:
      return {kind, 1};
    case StratumKind::affine2_minus_line:
    case StratumKind::affine2_minus_two_lines:
    case StratumKind::proj2_minus_point:
    case StratumKind::proj2_minus_deg3_orbit:
    case StratumKind::proj2_minus_three_rational_points:
    case StratumKind::proj2_minus_point_and_deg2_orbit:
      return {kind, 2};
    case StratumKind::proj1_minus_deg2_orbit:
      return {kind, 1};
  }
  throw std::logic_error("Stratum::of: unknown kind");
}

std::string Stratum::name() const {
  switch (kind) {
    case StratumKind::affine:
      return "affine" + std::to_string(dim);
    case StratumKind::affine_minus_point:
      return "affine" + std::to_string(dim) + "_minus_point";
    case StratumKind::proj:
      return "proj" + std::to_string(dim);
    default:
      break;
  }
  for (const auto& f : kFixedNames) {
    if (f.kind == kind) return f.name;
  }
  throw std::logic_error("Stratum::name: unknown kind");
}

std::optional<Stratum> Stratum::parse(std::string_view name) {
  for (const auto& f : kFixedNames) {
    if (name == f.name) return Stratum::of(f.kind);
  }
  constexpr std::string_view kMinusPoint = "_minus_point";
  if (name.starts_with("affine")) {
    auto rest = name.substr(6);
    if (rest.ends_with(kMinusPoint)) {
      auto n = parse_dim(rest.substr(0, rest.size() - kMinusPoint.size()));
      if (n) return Stratum::affine_minus_point(*n);
      return std::nullopt;
    }
    if (auto n = parse_dim(rest)) return Stratum::affine(*n);
    return std::nullopt;
  }
  if (name.starts_with("proj")) {
    if (auto n = parse_dim(name.substr(4))) return Stratum::proj(*n);
  }
  return std::nullopt;
}

const std::vector<Stratum>& catalog() {
  static const std::vector<Stratum> kCatalog = {
      Stratum::affine(1),
      Stratum::affine(2),
      Stratum::affine_minus_point(1),
      Stratum::affine_minus_point(2),
      Stratum::of(StratumKind::affine2_minus_line),
      Stratum::of(StratumKind::affine2_minus_two_lines),
      Stratum::proj(1),
      Stratum::proj(2),
      Stratum::of(StratumKind::proj1_minus_deg2_orbit),
      Stratum::of(StratumKind::proj2_minus_point),
      Stratum::of(StratumKind::proj2_minus_deg3_orbit),
      Stratum::of(StratumKind::proj2_minus_three_rational_points),
      Stratum::of(StratumKind::proj2_minus_point_and_deg2_orbit),
  };
  return kCatalog;
}

Integer point_count(const Stratum& s, std::uint64_t q, unsigned r) {
  if (r == 0) throw std::invalid_argument("point_count: r must be positive");
  if (q < 2) throw std::invalid_argument("point_count: q must be at least 2");
  const Integer qr = ipow(big(q), r);
  switch (s.kind) {
    case StratumKind::affine:
      return ipow(qr, s.dim);
    case StratumKind::affine_minus_point:
      return ipow(qr, s.dim) - 1;
    case StratumKind::affine2_minus_line:
      return qr * qr - qr;
    case StratumKind::affine2_minus_two_lines:
      return qr * qr - 2 * qr + 1;
    case StratumKind::proj:
      return proj_points(q, s.dim, r);
    case StratumKind::proj1_minus_deg2_orbit:
      return qr + 1 - 2 * indicator(r % 2 == 0);
    case StratumKind::proj2_minus_point:
      return proj_points(q, 2, r) - 1;
    case StratumKind::proj2_minus_deg3_orbit:
      return proj_points(q, 2, r) - 3 * indicator(r % 3 == 0);
    case StratumKind::proj2_minus_three_rational_points:
      return proj_points(q, 2, r) - 3;
    case StratumKind::proj2_minus_point_and_deg2_orbit:
      return proj_points(q, 2, r) - 1 - 2 * indicator(r % 2 == 0);
  }
  throw std::logic_error("point_count: unknown kind");
}

OrbitCounts orbit_counts(const Stratum& s, std::uint64_t q, unsigned rmax) {
  if (rmax == 0) throw std::invalid_argument("orbit_counts: rmax must be positive");
  std::vector<Integer> N(rmax + 1);
  for (unsigned r = 1; r <= rmax; ++r) N[r] = point_count(s, q, r);

  OrbitCounts out;
  out.b.assign(rmax + 1, 0);
  for (unsigned r = 1; r <= rmax; ++r) {
    Integer acc = 0;
    for (auto d : numtheory::divisors(r)) acc += numtheory::moebius(d) * N[r / d];
    if (acc % r != 0 || acc < 0) {
      throw std::logic_error("orbit_counts: b_" + std::to_string(r) + " of " + s.name() +
                             " is not a nonnegative integer");
    }
    out.b[r] = acc / r;
  }
  return out;
}

Series zeta_series(const Stratum& s, std::uint64_t q, std::size_t T) {
  std::vector<Rational> log_z(T + 1);
  for (std::size_t r = 1; r <= T; ++r) {
    log_z[r] = Rational(point_count(s, q, static_cast<unsigned>(r)), static_cast<unsigned long>(r));
    log_z[r].canonicalize();
  }
  return exp(Series(std::move(log_z)));
}

namespace {

void require_counting_series(const Series& f, const Stratum& s, const char* what) {
  if (!has_nonnegative_integer_coefficients(f)) {
    throw std::logic_error(std::string(what) + " of " + s.name() +
                           " has a coefficient that is not a nonnegative integer");
  }
}

}  // namespace

Series f_series(const Stratum& s, std::uint64_t q, std::size_t T) {
  const Series z = zeta_series(s, q, T);
  Series f = div(z, substitute_power(z, 2));
  require_counting_series(f, s, "f_series");
  return f;
}

Series fbar_series(const Stratum& s, std::uint64_t q, std::size_t T) {
  Series f = zeta_series(s, q, T);
  require_counting_series(f, s, "fbar_series");
  return f;
}

Series gf_series(const Stratum& s, std::uint64_t q, std::size_t T, bool multiset) {
  return multiset ? fbar_series(s, q, T) : f_series(s, q, T);
}

Series gf_series_from_orbits(const Stratum& s, std::uint64_t q, std::size_t T, bool multiset) {
  Series out = Series::one(T);
  if (T == 0) return out;
  const auto counts = orbit_counts(s, q, static_cast<unsigned>(T));
  for (std::size_t r = 1; r <= T; ++r) {
    const Integer& b = counts.b[r];
    if (b == 0) continue;
    std::vector<Rational> factor(T + 1);
    for (std::size_t k = 0; k * r <= T; ++k) {
      Integer c;
      if (multiset) {
        const Integer top = b + static_cast<unsigned long>(k) - 1;
        mpz_bin_ui(c.get_mpz_t(), top.get_mpz_t(), k);
      } else {
        mpz_bin_ui(c.get_mpz_t(), b.get_mpz_t(), k);
      }
      factor[k * r] = c;
    }
    out = mul(out, Series(std::move(factor)));
  }
  return out;
}

Integer closed_coeff(const Stratum& s, std::uint64_t q_in, unsigned n) {
  if (q_in < 2) throw std::invalid_argument("closed_coeff: q must be at least 2");
  if (n == 0) return 1;
  const Rational q = Rational(big(q_in));
  const auto qp = [&](long k) { return rpow(q, k); };
  const long nn = n;
  Rational v;

  switch (s.kind) {
    case StratumKind::affine: {
      const long N = s.dim;
      v = n <= 1 ? qp(nn * N) : qp(nn * N) - qp((nn - 1) * N);
      break;
    }
    case StratumKind::affine_minus_point: {
      const long N = s.dim;
      v = (qp(N) - 1) * (qp(nn * N) - sign(nn)) / (qp(N) + 1);
      break;
    }
    case StratumKind::affine2_minus_line: {
      const Rational den = q * q + q + 1;
      if (n % 2 == 0) {
        v = (q * q - 1) / den * (qp(2 * nn) - qp(nn / 2));
      } else {
        v = (q - 1) / den * ((q + 1) * qp(2 * nn) + qp((nn + 1) / 2));
      }
      break;
    }
    case StratumKind::affine2_minus_two_lines: {
      const Rational lead = (qp(4) - 1) / ((q * q + q + 1) * (q * q + q + 1));
      if (n == 1) {
        // Only n > 1 has a case-split form; a_V(1) is the rational point count.
        v = (q - 1) * (q - 1);
      } else if (n % 2 == 0) {
        const Rational half = nn / 2;
        v = lead * (qp(2 * nn) - qp(nn / 2) * (half * (qp(3) - 1) * (q - 1) / (qp(4) - 1) + 1));
      } else {
        const Rational half = (nn - 1) / 2;
        v = lead * (qp(2 * nn) + qp((nn - 1) / 2) * (half * (qp(3) - 1) / (q * q + 1) -
                                                       (q - 1) * (2 * q * q + q + 1) / (qp(4) - 1)));
      }
      break;
    }
    case StratumKind::proj: {
      if (s.dim == 1) {
        if (n == 1) v = q + 1;
        else if (n == 2) v = q * q;
        else v = qp(nn) - qp(nn - 2);
      } else if (s.dim == 2) {
        if (n == 1) v = q * q + q + 1;
        else if (n == 2) v = qp(4) + qp(3) + q * q;
        else if (n == 3) v = qp(6) + qp(5) + qp(4) - q * q - q;
        else v = (qp(6) + qp(5) + qp(4) - q * q - q - 1) * qp(2 * nn - 6);
      } else {
        throw std::invalid_argument("closed_coeff: no closed form for " + s.name() +
                                    "; use proj_coeff_general for n > N + 1");
      }
      break;
    }
    case StratumKind::proj1_minus_deg2_orbit: {
      if (n % 2 == 1) {
        v = (q + 1) / (q * q + 1) * ((q - 1) * qp(nn) + sign((nn - 1) / 2) * (q + 1));
      } else {
        v = (q * q - 1) / (q * q + 1) * (qp(nn) - sign(nn / 2));
      }
      break;
    }
    case StratumKind::proj2_minus_point: {
      if (n == 1) v = q * q + q;
      else if (n == 2) v = qp(4) + qp(3) - q;
      else v = (qp(4) + qp(3) - q - 1) * qp(2 * nn - 4);
      break;
    }
    case StratumKind::proj2_minus_deg3_orbit: {
      const Rational den = qp(4) - q * q + 1;
      if (n % 3 == 1) {
        v = (q * q + q + 1) / den * ((q * q - 1) * qp(2 * nn) + sign((nn - 1) / 3));
      } else if (n % 3 == 2) {
        v = (q * q + q + 1) / den * ((q * q - 1) * qp(2 * nn) + sign((nn - 2) / 3) * q * q);
      } else {
        v = (qp(3) - 1) * (q + 1) / den * (qp(2 * nn) - sign(nn / 3));
      }
      break;
    }
    case StratumKind::proj2_minus_three_rational_points: {
      const Rational tail = (nn - 1) * qp(3) - (nn + 2) * q * q + (nn - 2) * q - (nn + 1);
      v = (q - 1) / ((q * q + 1) * (q * q + 1)) *
          ((qp(3) + 2 * q * q + 2 * q + 1) * qp(2 * nn) + sign(nn) * tail);
      break;
    }
    case StratumKind::proj2_minus_point_and_deg2_orbit: {
      if (n % 2 == 1) {
        v = (q + 1) / (qp(4) + 1) * ((qp(3) - 1) * qp(2 * nn) + sign((nn - 1) / 2) * q * (q + 1));
      } else {
        v = (qp(3) - 1) * (q + 1) / (qp(4) + 1) * (qp(2 * nn) - sign(nn / 2));
      }
      break;
    }
  }
  if (!is_integer(v) || v < 0) {
    throw std::logic_error("closed_coeff: " + s.name() + " gave non-integral value " + v.get_str());
  }
  return v.get_num();
}

Integer proj_coeff_general(unsigned N, std::uint64_t q_in, unsigned n) {
  if (N == 0) throw std::invalid_argument("proj_coeff_general: N must be positive");
  if (n <= N + 1) throw std::invalid_argument("proj_coeff_general: requires n > N + 1");
  if (q_in < 2) throw std::invalid_argument("proj_coeff_general: q must be at least 2");
  const Rational q = Rational(big(q_in));
  const auto lambda = [&](long r) {
    Rational out = 1;
    for (long j = 1; j <= r; ++j) out *= 1 - rpow(q, -j);
    return out;
  };
  Rational total = 0;
  const long NN = N;
  const long nn = n;
  for (long i = NN / 2 + 1; i <= NN; ++i) {
    const Rational weight = sign(NN - i) * lambda(2 * i) / (lambda(2 * i - NN - 1) * lambda(i) * lambda(NN - i));
    total += weight * rpow(q, i * nn - (NN - i) * (NN - i + 1) / 2);
  }
  if (!is_integer(total) || total < 0) {
    throw std::logic_error("proj_coeff_general: non-integral value " + total.get_str());
  }
  return total.get_num();
}

}  // namespace orbital
