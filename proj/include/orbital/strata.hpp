#pragma once

// The finite catalog of locally closed strata of A^N, P^1 and P^2 whose
// rational n-set counts feed the orbit-count formulas. Each stratum carries a
// point-count rule N_r = |V(F_{q^r})|; everything else (sigma-orbit counts,
// zeta function, n-set and n-multiset generating functions) is derived from it.
//
// The rules are polynomial in q, so the functions here accept any integer
// q >= 2, not only prime powers.

#include "orbital/bigint.hpp"
#include "orbital/series.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace orbital {

enum class StratumKind {
  affine,                             // A^N
  affine_minus_point,                 // A^N \ {*}
  affine2_minus_line,                 // A^2 \ L
  affine2_minus_two_lines,            // A^2 \ (L u L'), L and L' not parallel
  proj,                               // P^N
  proj1_minus_deg2_orbit,             // P^1 \ O(P), deg P = 2
  proj2_minus_point,                  // P^2 \ {*}
  proj2_minus_deg3_orbit,             // P^2 \ O(Q), deg Q = 3
  proj2_minus_three_rational_points,  // P^2 \ {P1, P2, P3}
  proj2_minus_point_and_deg2_orbit,   // P^2 \ {P1, O(P)}
};

struct Stratum {
  StratumKind kind = StratumKind::proj;
  unsigned dim = 1;  // N for the parametric kinds; fixed otherwise

  static Stratum affine(unsigned n) { return {StratumKind::affine, n}; }
  static Stratum affine_minus_point(unsigned n) { return {StratumKind::affine_minus_point, n}; }
  static Stratum proj(unsigned n) { return {StratumKind::proj, n}; }
  static Stratum of(StratumKind kind);

  /// Stable name, e.g. "proj2_minus_deg3_orbit", "affine3".
  std::string name() const;
  static std::optional<Stratum> parse(std::string_view name);

  bool operator==(const Stratum&) const = default;
};

/// The thirteen strata used by the N = 1, 2 formulas.
const std::vector<Stratum>& catalog();

/// |V(F_{q^r})|, r >= 1.
Integer point_count(const Stratum& s, std::uint64_t q, unsigned r);

/// b[r] = number of sigma-orbits of length r, for 1 <= r <= rmax (b[0] unused).
struct OrbitCounts {
  std::vector<Integer> b;
};

/// Moebius inversion of N_r; throws std::logic_error if some b[r] is not a
/// nonnegative integer.
OrbitCounts orbit_counts(const Stratum& s, std::uint64_t q, unsigned rmax);

/// Z(V, x) = exp(sum_r N_r x^r / r), truncated at T.
Series zeta_series(const Stratum& s, std::uint64_t q, std::size_t T);

/// Generating function of rational n-sets, Z(x)/Z(x^2).
Series f_series(const Stratum& s, std::uint64_t q, std::size_t T);
/// Generating function of rational n-multisets, Z(x).
Series fbar_series(const Stratum& s, std::uint64_t q, std::size_t T);
/// f or fbar depending on the flag.
Series gf_series(const Stratum& s, std::uint64_t q, std::size_t T, bool multiset);

/// The same series assembled from sigma-orbits:
/// prod_r (1 + x^r)^{b_r} for sets, prod_r (1 - x^r)^{-b_r} for multisets.
Series gf_series_from_orbits(const Stratum& s, std::uint64_t q, std::size_t T, bool multiset);

/// a_V(n) from the explicit case-split closed forms. Defined for every
/// catalog stratum and for A^N, A^N \ {*} of any N; P^N needs N <= 2.
Integer closed_coeff(const Stratum& s, std::uint64_t q, unsigned n);

/// a_{P^N}(n) for n > N + 1 as
///   sum_{N/2 < i <= N} (-1)^{N-i} L(2i) / (L(2i-N-1) L(i) L(N-i)) q^{in - (N-i)(N-i+1)/2}
/// with L(r) = (1 - 1/q)...(1 - 1/q^r), L(0) = 1.
Integer proj_coeff_general(unsigned N, std::uint64_t q, unsigned n);

}  // namespace orbital
