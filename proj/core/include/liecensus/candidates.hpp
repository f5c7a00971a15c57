#ifndef LIECENSUS_CANDIDATES_HPP
#define LIECENSUS_CANDIDATES_HPP

#include "liecensus/bounds.hpp"
#include "liecensus/census.hpp"
#include "liecensus/numeric.hpp"
#include "liecensus/primes.hpp"
#include "liecensus/weight.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace liecensus {

/// A finite group of Lie type ^eG(p^t): family and rank of the ambient
/// algebraic group, twist order e of the graph automorphism, field
/// exponent t, defining characteristic p.
struct FiniteGroupDescriptor {
  LieType lie_type;
  int twist_e = 1;
  long long field_exponent_t = 1;
  long long characteristic_p = 2;

  /// "2A2(7^1)" style rendering.
  std::string name() const;

  auto operator<=>(const FiniteGroupDescriptor&) const = default;
};

/// Stable flag strings carried by candidate records.
namespace flags {
inline constexpr const char* over_approximation = "over_approximation";
inline constexpr const char* kac_case_excluded = "kac_case_excluded";
inline constexpr const char* self_dual_filtered_out = "self_dual_filtered_out";
/// The degree-7 orthogonal representation of 2G2(3^t): existence is
/// known, realizability over a specific field is not checked here.
inline constexpr const char* ree_g2_stub = "ree_g2_degree7_stub";
/// Twisted group with t = k: the subfield condition only proves t in
/// {k, k/e}; realizability of the t = k option is not decided.
inline constexpr const char* t_eq_k_unverified = "twisted_t_eq_k_unverified";
} // namespace flags

/// One screened candidate tuple.  Records in the main list satisfy
/// p < weyl_dim and weyl_dim > r; side-list records carry a flag saying
/// why they are excluded or set aside.
struct CandidateRecord {
  FiniteGroupDescriptor descriptor;
  Weight weight;
  Int dim;
  std::vector<std::string> record_flags;        // sorted
  std::vector<std::string> constraints_applied; // rule identifiers, fixed order
};

/// (family, rank, twist) triple admitted by the type-level screens.
struct TypeTwist {
  Family family;
  int rank;
  int twist_e;

  auto operator<=>(const TypeTwist&) const = default;
};

/// All (family, rank, twist) with rank^2 < 3r, restricted when
/// exclude_self_dual to the families that can fail to preserve a
/// symmetric form: A_n (n > 1), 2A_n, D_{2n+1} / 2D_{2n+1} (n > 1), E6,
/// 2E6.  Suzuki and Ree twists never appear.  Throws domain_error for
/// r <= 2.
std::vector<TypeTwist> allowed_types(long long r, bool exclude_self_dual);

/// Field exponents compatible with k = t or k = et: {k} plus k/e when e
/// divides k.  Ascending.
std::vector<long long> field_exponents(long long k, int e);

struct WeightCandidate {
  Weight weight;
  Int dim;
  std::vector<std::string> wflags;
};

struct CandidateWeights {
  std::vector<WeightCandidate> main;    // always flagged over_approximation
  std::vector<WeightCandidate> flagged; // kac / self-dual side list
  Int cap_bound;                        // Weyl-cap bound used for the search
  bool cap_inclusive = false;
  long long cap_effective = 0;          // after the dimension ceiling
  bool truncated = false;               // weights above the ceiling exist
};

struct CandidateOptions {
  bool exclude_self_dual = true;
  long long p_limit_override = 0; // 0: none, use floor of p_bound(r)
  long long dim_ceiling = 1'000'000;
  long long sieve_limit = default_sieve_limit;
  std::uint64_t bit_budget = default_bit_budget;
  const CacheConfig* cache = nullptr;
};

/// All p-restricted dominant weights w for which a reducible Weyl module
/// of this highest weight could hide a dimension-r composition factor:
/// r < weyl_dim(w), p < weyl_dim(w), weyl_dim(w) within the Weyl cap.
/// Weights with weyl_dim exactly r go to the flagged list as Kac cases;
/// with exclude_self_dual, self-dual weights that pass every other filter
/// go to the flagged list too.  Membership of an actual dimension-r
/// modular factor is NOT decided: main entries are an over-approximation.
CandidateWeights candidate_weights(const LieType& type, long long r, long long p,
                                   bool exclude_self_dual,
                                   const CandidateOptions& opts = {});

struct PerPrimeCount {
  long long p = 0;
  long long main_count = 0;
  long long kac_count = 0;
  long long self_dual_count = 0;
};

struct CandidatesSummary {
  long long r = 0;
  long long k = 0;
  bool exclude_self_dual = true;
  long long prime_limit = 0; // primes enumerated strictly below this
  std::vector<PerPrimeCount> per_p;
  long long total_main = 0;
  long long total_flagged = 0;
  std::optional<Int> bb1_floor;
  std::optional<Int> th8_floor;
  std::optional<Int> t11_floor;
  bool per_p_within_bb1 = true;
  bool total_within_th8 = true;
  bool total_within_t11 = true;
  std::vector<std::string> notes;
};

struct CandidatesResult {
  std::vector<CandidateRecord> records;
  std::vector<CandidateRecord> flagged_records;
  CandidatesSummary summary;
};

/// Cartesian assembly allowed_types x field_exponents x primes below the
/// characteristic bound x candidate_weights, deduplicated, in
/// deterministic (p, family, rank, twist, t, weight) order.  Counts are
/// checked against the bb1/th8/t11 caps in the summary.  Throws
/// resource_limit_error when the p range exceeds the sieve limit and no
/// p_limit_override is given.
CandidatesResult enumerate_candidates(long long r, long long k,
                                      const CandidateOptions& opts = {});

/// Streaming variant: records are emitted prime by prime in the same
/// deterministic order; only the summary is accumulated in memory.
CandidatesSummary enumerate_candidates_stream(
    long long r, long long k, const CandidateOptions& opts,
    const std::function<void(const CandidateRecord&)>& on_main,
    const std::function<void(const CandidateRecord&)>& on_flagged);

/// Check the record-level invariants (p-restriction, p < dim, dim > r,
/// t in field_exponents(k, e), twist validity).  Returns the violated
/// rule names; empty means the record is sound.  Flagged side-list
/// records are checked against their own relaxed contract.
std::vector<std::string> validate_record(const CandidateRecord& rec, long long r,
                                         long long k);

} // namespace liecensus

#endif
