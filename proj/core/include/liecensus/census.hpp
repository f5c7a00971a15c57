#ifndef LIECENSUS_CENSUS_HPP
#define LIECENSUS_CENSUS_HPP

#include "liecensus/numeric.hpp"
#include "liecensus/weight.hpp"
#include "liecensus/weyl.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace liecensus {

struct CensusEntry {
  LieType lie_type;
  Weight weight;
  Int dim;

  bool operator==(const CensusEntry& o) const {
    return lie_type == o.lie_type && weight == o.weight && dim == o.dim;
  }
  bool operator<(const CensusEntry& o) const {
    if (lie_type != o.lie_type) return lie_type < o.lie_type;
    if (weight != o.weight) return weight < o.weight;
    return dim < o.dim;
  }
};

/// Optional on-disk cache for enumerated censuses.  Files are JSON lines:
/// a header object {schema_version, type, cap} followed by one entry per
/// line with the dimension as a decimal string.  A header that does not
/// match what the reader expects makes the file invisible (recomputed).
struct CacheConfig {
  std::filesystem::path dir;
};

inline constexpr int census_cache_schema = 1;

/// Largest rank for which a nontrivial module of dimension <= D can
/// exist: A -> D-1; B -> floor((D-1)/2) (at least 2); C -> floor(D/2)
/// (at least 2); D -> floor(D/2) (at least 3); an exceptional family maps
/// to its fixed rank when D reaches its minimal dimension (27, 56, 248,
/// 26, 7) and to 0 (excluded) below it.  Returns 0 whenever the family is
/// excluded at this D.  Throws domain_error for D < 1.
int rank_cap(Family family, long long D);

/// All dominant weights of the type with weyl_dim <= D, each exactly
/// once, sorted lexicographically.  Pruned depth-first search; pruning is
/// sound because weyl_dim is strictly monotone under componentwise
/// increase.  When a cache is supplied, a matching file is reused and a
/// missing one is written.
std::vector<CensusEntry> enumerate_weights(const LieType& type, long long D,
                                           const CacheConfig* cache = nullptr);

/// All (type, weight) pairs with weyl_dim exactly r, over canonical types
/// (C from rank 3, D from rank 4) with rank <= rank_cap, or over the full
/// label ranges when canonical_only is false.  Throws domain_error if r
/// is not prime.
std::vector<CensusEntry> prime_degree_census(long long r, bool canonical_only = true,
                                             const CacheConfig* cache = nullptr);

struct KacReport {
  long long prime = 0;
  std::vector<CensusEntry> expected;
  std::vector<CensusEntry> found;
  bool match = false;
  std::vector<std::string> notes;
};

/// Check the prime-degree census against the classification of
/// prime-dimension irreducible modules: A_{r-1} with omega_1 or
/// omega_{r-1} (r > 2), B_{(r-1)/2} with omega_1 (r > 2, collapsing B_1
/// to A_1 at r = 3), G_2 with omega_1 at r = 7, and A_1 with (r-1) for
/// every r.
KacReport verify_kac(long long r, const CacheConfig* cache = nullptr);

} // namespace liecensus

#endif
