#pragma once

// Brute-force verifier. Enumerates PGL_{N+1}(F_q), computes the orbits of the
// group generated by gamma and the q-Frobenius on points of P^N of degree
// <= n, and counts orbits of rational n-sets / n-multisets by averaging fixed
// points over the whole group. Also checks the quotient point counts
// |(P^N / gamma)(F_{q^r})| and |(A^N / gamma)(F_q)|.

#include "orbital/bigint.hpp"
#include "orbital/gfq.hpp"
#include "orbital/numtheory.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <vector>

namespace orbital::oracle {

struct Budget {
  /// Cap on log2 of field sizes and of enumerated point sets.
  unsigned field_bits = gfq::max_field_bits();
  /// Cap on |PGL_{N+1}(F_q)| or |GL_N(F_q)| for full-group enumeration.
  std::uint64_t max_group_order = std::uint64_t{1} << 16;
};

/// Square matrix over F_q; entries are element codes of the level-1 tower.
struct Matrix {
  unsigned size = 0;
  std::vector<gfq::FieldElem> entries;  // row-major

  gfq::FieldElem at(unsigned i, unsigned j) const { return entries[i * size + j]; }
  bool operator==(const Matrix&) const = default;
};

Matrix identity_matrix(const gfq::FieldTower& F, unsigned size);
Matrix multiply(const gfq::FieldTower& F, const Matrix& a, const Matrix& b);
gfq::FieldElem determinant(const gfq::FieldTower& F, Matrix m);
/// Order in GL_n(F_q).
std::uint64_t linear_order(const gfq::FieldTower& F, const Matrix& m);

/// A PGL class, stored as the representative whose first nonzero entry in
/// row-major order is 1.
class ProjMatrix {
 public:
  /// Throws std::invalid_argument if m is singular.
  static ProjMatrix canonical(const gfq::FieldTower& F, Matrix m);

  const Matrix& matrix() const { return m_; }
  unsigned dim() const { return m_.size - 1; }
  bool operator==(const ProjMatrix&) const = default;

 private:
  Matrix m_;
};

/// Order in PGL_{N+1}(F_q): least s with gamma^s scalar.
std::uint64_t projective_order(const gfq::FieldTower& F, const ProjMatrix& g);

/// A point of P^N(F_{q^r}) with first nonzero coordinate 1.
struct ProjPoint {
  unsigned level = 1;
  std::vector<gfq::FieldElem> coords;

  bool operator==(const ProjPoint&) const = default;
};

/// size -> number of joint orbits of that size.
using OrbitSizeTally = std::map<std::uint64_t, std::uint64_t>;

/// The level-1 tower F_q (shared instance).
const gfq::FieldTower& base_field(const PrimePower& q);

std::uint64_t gl_group_order(unsigned size, const PrimePower& q);
std::uint64_t pgl_group_order(unsigned dim, const PrimePower& q);

/// GL_size(F_q), every element once.
std::vector<Matrix> enumerate_gl(unsigned size, const PrimePower& q, const Budget& budget = {});
/// PGL_{dim+1}(F_q), every class once, canonicalized.
std::vector<ProjMatrix> enumerate_pgl(unsigned dim, const PrimePower& q, const Budget& budget = {});

/// Points of P^dim(F_{q^r}) whose degree is exactly r = t.level().
std::vector<ProjPoint> points_of_degree(unsigned dim, const gfq::FieldTower& t, const Budget& budget = {});

/// Precomputed Frobenius-orbit structure of P^dim over F_{q^r}, r <= nmax.
class BurnsideContext {
 public:
  BurnsideContext(unsigned dim, const PrimePower& q, unsigned nmax, const Budget& budget = {});
  ~BurnsideContext();
  BurnsideContext(BurnsideContext&&) noexcept;
  BurnsideContext& operator=(BurnsideContext&&) noexcept;

  unsigned dim() const;
  const PrimePower& q() const;
  unsigned nmax() const;
  const gfq::FieldTower& base() const;
  const std::vector<ProjMatrix>& group() const;

  /// Number of points of degree exactly r.
  std::uint64_t degree_point_count(unsigned r) const;

  /// Sizes of joint <gamma, sigma>-orbits on points of degree <= n (n <= nmax).
  /// Every orbit is recorded, including those larger than n.
  OrbitSizeTally joint_orbit_tally(const ProjMatrix& g, unsigned n) const;

  /// Joint orbits at one level r, as lists of point coordinates. For tests.
  std::vector<std::vector<ProjPoint>> joint_orbits(const ProjMatrix& g, unsigned r) const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

OrbitSizeTally joint_orbit_tally(const ProjMatrix& g, unsigned dim, const PrimePower& q, unsigned n,
                                 const Budget& budget = {});

/// Coefficients 0..nmax of prod (1 + x^size) (sets) or prod 1/(1 - x^size)
/// (multisets) over the tallied orbits.
std::vector<Integer> fix_series(const OrbitSizeTally& tally, unsigned nmax, bool multiset);
/// Number of gamma-invariant rational n-sets (n-multisets).
Integer fix_count(const OrbitSizeTally& tally, unsigned n, bool multiset);

struct FixedSetRecord {
  ProjMatrix gamma;
  std::vector<Integer> sets;       // n = 0..nmax
  std::vector<Integer> multisets;  // n = 0..nmax
};

struct BurnsideTable {
  std::uint64_t group_order = 0;
  std::vector<Integer> sets;       // orbit counts, n = 0..nmax
  std::vector<Integer> multisets;  // orbit counts, n = 0..nmax
};

/// Orbit counts for every n <= nmax in one pass over the group. The fixed-point
/// sums are checked for divisibility by |PGL| (std::logic_error otherwise).
/// When per_gamma is non-null it receives each element's fixed counts, in
/// group order.
BurnsideTable burnside_table(const BurnsideContext& ctx, std::vector<FixedSetRecord>* per_gamma = nullptr);

Integer burnside_count(unsigned dim, const PrimePower& q, unsigned n, bool multiset, const Budget& budget = {});

enum class QuotientMethod {
  /// Enumerate when the field and point set are small, else twisted_kernel.
  automatic,
  /// Enumerate gamma-orbits in the field of degree r * ord(gamma) and keep
  /// the sigma^r-stable ones.
  enumerate,
  /// Average over i of |{P : sigma^r(P) = gamma^i(P)}|, each set measured as
  /// the kernel of w -> sigma^r(w) - A^i w by linear algebra over F_q.
  twisted_kernel,
};

/// Number of gamma-orbits O of P^N with sigma^r(O) = O.
Integer quotient_point_count(const ProjMatrix& g, const PrimePower& q, unsigned r,
                             QuotientMethod method = QuotientMethod::automatic, const Budget& budget = {});

/// Number of gamma-orbits O of A^N with sigma(O) = O, for gamma in GL_N(F_q).
Integer affine_quotient_count(const Matrix& g, const PrimePower& q,
                              QuotientMethod method = QuotientMethod::automatic, const Budget& budget = {});

}  // namespace orbital::oracle
