#include "liecensus/bounds.hpp"

#include "liecensus/errors.hpp"
#include "liecensus/primes.hpp"

#include <algorithm>

namespace liecensus {

namespace {

// Decide  sqrt(T1) + sqrt(T2) >= M  (or the one-term version) exactly by
// repeated squaring; every quantity is a non-negative integer.
bool sum_sqrt_ge(const std::vector<Int>& T, const Int& M) {
  if (M <= 0) return true;
  if (T.size() == 1) return T[0] >= M * M;
  if (T.size() == 2) {
    const Int K = M * M - T[0] - T[1];
    if (K <= 0) return true;
    return 4 * T[0] * T[1] >= K * K;
  }
  throw internal_error("sum_sqrt_ge supports at most two radical terms");
}

// floor(sum_i sqrt(T_i)): start from the isqrt underestimate and correct
// upward; at most |T| increments are needed.
Int floor_sum_sqrt(const std::vector<Int>& T, bool* exact) {
  Int n = 0;
  bool all_square = true;
  for (const Int& t : T) {
    const Int s = isqrt(t);
    if (s * s != t) all_square = false;
    n += s;
  }
  while (sum_sqrt_ge(T, n + 1)) ++n;
  if (exact) *exact = all_square;
  return n;
}

// Radicands T_i with value = sum_i sqrt(T_i), valid for exponent >= 0.
std::vector<Int> radicands(const BoundExpr& e) {
  if (e.exponent.num < 0) throw internal_error("radicands need a non-negative exponent");
  const std::uint64_t power =
      static_cast<std::uint64_t>(e.exponent.num) * (e.exponent.den == 1 ? 2 : 1);
  const Int bp = ipow(Int(e.base), power);
  std::vector<Int> T;
  T.reserve(e.coefficient_terms.size());
  for (const auto& [m, s] : e.coefficient_terms) T.push_back(Int(m) * m * s * bp);
  return T;
}

std::uint64_t value_bits_estimate(const BoundExpr& e) {
  const std::uint64_t base_bits = bit_length(Int(e.base));
  const std::uint64_t mag = static_cast<std::uint64_t>(e.exponent.num < 0 ? 0 : e.exponent.num);
  return mag * base_bits / static_cast<std::uint64_t>(e.exponent.den) + 64;
}

} // namespace

bool BoundExpr::value_ge(const Int& m) const {
  if (exponent.num >= 0) return sum_sqrt_ge(radicands(*this), m);
  // value = (sum m_i sqrt(s_i)) / base^(-num), den == 1 only.
  if (exponent.den != 1) throw internal_error("negative half-integer exponents are not evaluated");
  std::vector<Int> T;
  for (const auto& [mm, s] : coefficient_terms) T.push_back(Int(mm) * mm * s);
  return sum_sqrt_ge(T, m * ipow(Int(base), static_cast<std::uint64_t>(-exponent.num)));
}

std::optional<Int> BoundExpr::ceil_value() const {
  if (!floor_value) return std::nullopt;
  return *floor_value + (exact ? 0 : 1);
}

std::string BoundExpr::symbolic() const {
  std::string coeff;
  for (std::size_t i = 0; i < coefficient_terms.size(); ++i) {
    const auto& [m, s] = coefficient_terms[i];
    std::string term;
    if (s == 1) {
      term = std::to_string(m);
    } else if (m == 1) {
      term = "sqrt(" + std::to_string(s) + ")";
    } else {
      term = std::to_string(m) + "*sqrt(" + std::to_string(s) + ")";
    }
    coeff += (i ? "+" : "") + term;
  }
  if (coefficient_terms.size() > 1) coeff = "(" + coeff + ")";

  std::string power;
  if (exponent.num == 0) {
    power = "1";
  } else if (exponent.num == 1 && exponent.den == 1) {
    power = std::to_string(base);
  } else if (exponent.den == 1) {
    power = std::to_string(base) + "^" + std::to_string(exponent.num);
  } else {
    power = std::to_string(base) + "^(" + exponent.str() + ")";
  }

  if (coeff == "1") return power;
  if (power == "1") return coeff;
  return coeff + "*" + power;
}

BoundExpr make_bound(std::vector<std::pair<long long, long long>> coeff_terms, long long base,
                     Rational exponent, std::uint64_t bit_budget) {
  if (coeff_terms.empty()) coeff_terms = {{1, 1}};
  for (const auto& [m, s] : coeff_terms)
    if (m <= 0 || s <= 0) throw domain_error("coefficient terms must be positive");
  if (base < 1) throw domain_error("bound base must be >= 1");
  if (exponent.den != 1 && exponent.den != 2)
    throw internal_error("bound exponents are half-integral at most");

  BoundExpr e;
  e.coefficient_terms = std::move(coeff_terms);
  e.base = base;
  e.exponent = exponent;

  if (exponent.num < 0 && exponent.den == 2) {
    e.flags.push_back("floor_not_computed_negative_half_exponent");
    return e;
  }
  if (value_bits_estimate(e) > bit_budget) {
    e.flags.push_back("floor_exceeds_bit_budget");
    return e;
  }

  if (exponent.num >= 0) {
    e.floor_value = floor_sum_sqrt(radicands(e), &e.exact);
  } else {
    // den == 1: divide the radical sum by base^(-num).
    std::vector<Int> T;
    for (const auto& [m, s] : e.coefficient_terms) T.push_back(Int(m) * m * s);
    const Int divisor = ipow(Int(e.base), static_cast<std::uint64_t>(-exponent.num));
    bool sum_exact = false;
    const Int sum_floor = floor_sum_sqrt(T, &sum_exact);
    Int n = sum_floor / divisor;
    while (e.value_ge(n + 1)) ++n;
    e.floor_value = n;
    e.exact = sum_exact && sum_floor % divisor == 0 && sum_floor / divisor == n;
  }
  return e;
}

BoundExpr p_bound(long long r, std::uint64_t bit_budget) {
  if (r < 2 || !is_prime(r)) throw domain_error(std::to_string(r) + " is not prime");
  BoundExpr e = make_bound({{1, 1}}, r, Rational(r * r, 2), bit_budget);
  if (r == 2) e.flags.push_back("theorem_requires_r_gt_2");
  return e;
}

BoundExpr weyl_cap(const std::optional<LieType>& type, long long d, std::uint64_t bit_budget) {
  if (d < 2) throw domain_error("module dimension must be >= 2");
  auto generic = [&](std::vector<std::string> extra) {
    BoundExpr e = make_bound({{1, 1}}, d, Rational(d * d, 2), bit_budget);
    e.flags.push_back("strict_bound");
    for (auto& f : extra) e.flags.push_back(std::move(f));
    return e;
  };
  if (!type) return generic({});
  require_valid(*type);
  const int n = type->rank;
  switch (type->family) {
    case Family::A: {
      BoundExpr e = make_bound({{1, 1}}, d, Rational(d, 1), bit_budget);
      e.flags.push_back("inclusive_bound");
      return e;
    }
    case Family::B: {
      if (n >= 7) {
        BoundExpr e = make_bound({{1, 1}}, d, Rational(d, 2), bit_budget);
        e.flags.push_back("inclusive_bound");
        return e;
      }
      return generic({"spin_lower_bound_d_ge_" + std::to_string(1LL << n)});
    }
    case Family::C: {
      BoundExpr e = make_bound({{1, 1}}, d, Rational(d - 4, 1), bit_budget);
      e.flags.push_back("inclusive_bound");
      return e;
    }
    case Family::D: {
      if (n >= 8) {
        BoundExpr e = make_bound({{1, 1}}, d, Rational(d + 2, 2), bit_budget);
        e.flags.push_back("inclusive_bound");
        return e;
      }
      return generic({"spin_lower_bound_d_ge_" + std::to_string(1LL << (n - 1))});
    }
    default:
      return generic({});
  }
}

BoundExpr rep_count_cap(const std::optional<Family>& family, long long d, long long p,
                        std::uint64_t bit_budget) {
  if (d < 1) throw domain_error("dimension must be >= 1");
  if (p < 2 || !is_prime(p)) throw domain_error(std::to_string(p) + " is not prime");
  if (p == 2) return make_bound({{1, 1}}, d, Rational(1, 1), bit_budget);
  if (!family || *family == Family::A) return make_bound({{1, 1}}, d, Rational(4, 1), bit_budget);
  return make_bound({{1, 1}}, d, Rational(5, 2), bit_budget);
}

CandidateCountCaps candidate_count_caps(long long r, std::uint64_t bit_budget) {
  if (r < 2 || !is_prime(r)) throw domain_error(std::to_string(r) + " is not prime");
  CandidateCountCaps caps;
  caps.bb1 = make_bound({{6, 3 * r}, {7, 1}}, r, Rational(4, 1), bit_budget);
  // th8's exponent is built as (p-bound exponent) + 4 and must coincide
  // with (r^2+8)/2; the identity r^((r^2+8)/2) = r^4 * r^(r^2/2) is what
  // chains the per-characteristic count with the characteristic bound.
  const Rational glued = Rational(r * r, 2) + Rational(4, 1);
  const Rational direct = Rational(r * r + 8, 2);
  if (glued != direct) throw internal_error("candidate-cap exponent identity failed");
  caps.th8 = make_bound({{6, 3 * r}, {7, 1}}, r, direct, bit_budget);
  caps.t11 = make_bound({{4, 3 * r}, {2, 1}}, r, direct, bit_budget);
  if (caps.t11.exponent != caps.th8.exponent)
    throw internal_error("candidate-cap exponent identity failed");
  return caps;
}

AltCap alternating_cap(long long m) {
  if (m < 1) throw domain_error("matrix degree must be >= 1");
  AltCap cap;
  cap.value = Rational(3 * m + 6, 2);
  cap.floor = Int((3 * m + 6) / 2);
  return cap;
}

Int second_minimal_dim(Family family, int n) {
  const long long nn = n;
  switch (family) {
    case Family::A:
      if (n < 1) throw domain_error("A_n needs n >= 1");
      return Int((nn * nn + nn) / 2);
    case Family::B:
      if (n < 7) throw domain_error("the B_n second-minimal bound is stated for n >= 7");
      return Int(2 * nn * nn + nn);
    case Family::C:
      if (n < 2) throw domain_error("C_n needs n >= 2");
      return Int(2 * nn * nn - nn - 2);
    case Family::D:
      if (n < 8) throw domain_error("the D_n second-minimal bound is stated for n >= 8");
      return Int(2 * nn * nn - nn - 2);
    default:
      throw domain_error("second minimal dimensions are tabulated for classical families only");
  }
}

Int order_of_sl(int r, const Int& q, std::uint64_t bit_budget) {
  if (r < 2) throw domain_error("SL_r needs r >= 2");
  if (q < 2) throw domain_error("field size must be >= 2");
  const std::uint64_t bits =
      (static_cast<std::uint64_t>(r) * r - 1) * bit_length(q) + 64;
  if (bits > bit_budget)
    throw resource_limit_error("|SL_" + std::to_string(r) +
                               "(q)| exceeds the bit budget; raise --bits for a numeric value");
  Int order = ipow(q, static_cast<std::uint64_t>(r) * (r - 1) / 2);
  Int qi = q;
  for (int i = 2; i <= r; ++i) {
    qi *= q;
    order *= qi - 1;
  }
  return order;
}

} // namespace liecensus
