#ifndef LIECENSUS_BOUNDS_HPP
#define LIECENSUS_BOUNDS_HPP

#include "liecensus/lie_type.hpp"
#include "liecensus/numeric.hpp"

#include <optional>
#include <string>
#include <vector>

namespace liecensus {

inline constexpr std::uint64_t default_bit_budget = 65536;

/// Exact symbolic bound of the form
///
///   (sum_i  m_i * sqrt(s_i)) * base^(num/den)
///
/// with integer m_i, s_i and a reduced rational exponent (den is 1 or 2).
/// The floor is computed by integer square-root arithmetic whenever the
/// evaluation stays inside the bit budget; otherwise the expression is
/// symbolic-only and carries the "floor_exceeds_bit_budget" flag.
struct BoundExpr {
  std::vector<std::pair<long long, long long>> coefficient_terms; // (m, s)
  long long base = 1;
  Rational exponent{0, 1};
  std::optional<Int> floor_value;
  bool exact = false; // the value is itself an integer
  std::vector<std::string> flags;

  /// Ceiling (floor + 1 unless exact); only when a floor was computed.
  std::optional<Int> ceil_value() const;

  /// "(6*sqrt(21)+7)*7^4" style rendering; deterministic.
  std::string symbolic() const;

  /// Exact comparison value >= m for integer m >= 0 (no rounding).
  bool value_ge(const Int& m) const;
};

/// Build a bound expression and evaluate its floor within the bit budget.
BoundExpr make_bound(std::vector<std::pair<long long, long long>> coeff_terms,
                     long long base, Rational exponent,
                     std::uint64_t bit_budget = default_bit_budget);

/// The characteristic bound r^(r^2/2).  Defined for every prime; for
/// r = 2 the statement it certifies needs r > 2, so the result is
/// flagged "theorem_requires_r_gt_2".
BoundExpr p_bound(long long r, std::uint64_t bit_budget = default_bit_budget);

/// Cap on the Weyl-module dimension in terms of d = dim V.  Generic form
/// d^(d^2/2); refined per family where the refinement is stated
/// unconditionally or the rank is large enough: A -> d^d, B (n >= 7) ->
/// d^(d/2), C -> d^(d-4), D (n >= 8) -> d^((d+2)/2).  Small-rank B/D fall
/// back to the generic cap and are flagged with the 2^n / 2^(n-1) spin
/// lower bound.  Refined caps are inclusive (dim W <= cap); the generic
/// cap is strict (dim W < cap); see the "inclusive" flag.
BoundExpr weyl_cap(const std::optional<LieType>& type, long long d,
                   std::uint64_t bit_budget = default_bit_budget);

/// Cap on the number of p-restricted irreducibles of dimension <= d:
/// d for p = 2; d^4 for family A (and for an unknown family); d^(5/2)
/// otherwise.
BoundExpr rep_count_cap(const std::optional<Family>& family, long long d, long long p,
                        std::uint64_t bit_budget = default_bit_budget);

struct CandidateCountCaps {
  BoundExpr bb1; // (6*sqrt(3r)+7) * r^4            per characteristic
  BoundExpr th8; // (6*sqrt(3r)+7) * r^(r^2/2 + 4)  all characteristics
  BoundExpr t11; // (4*sqrt(3r)+2) * r^((r^2+8)/2)  non-self-dual count
};

/// The three candidate-count caps; the exponent identity
/// r^((r^2+8)/2) = r^4 * r^(r^2/2) is asserted structurally.
CandidateCountCaps candidate_count_caps(long long r,
                                        std::uint64_t bit_budget = default_bit_budget);

struct AltCap {
  Rational value; // (3m+6)/2
  Int floor;
};

/// Largest alternating-group degree u with Alt(u) a section of GL_m:
/// u <= (3m+6)/2.
AltCap alternating_cap(long long m);

/// Second minimal irreducible dimension of a classical family:
/// (n^2+n)/2 for A_n; 2n^2+n for B_n (n >= 7); 2n^2-n-2 for C_n;
/// 2n^2-n-2 for D_n (n >= 8).  Throws domain_error outside the stated
/// rank ranges.
Int second_minimal_dim(Family family, int n);

/// |SL_r(q)| = q^(r(r-1)/2) * prod_{i=2..r} (q^i - 1), exactly.
/// Throws resource_limit_error when the result would exceed the budget.
Int order_of_sl(int r, const Int& q, std::uint64_t bit_budget = default_bit_budget);

} // namespace liecensus

#endif
