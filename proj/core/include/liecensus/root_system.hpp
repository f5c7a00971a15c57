#ifndef LIECENSUS_ROOT_SYSTEM_HPP
#define LIECENSUS_ROOT_SYSTEM_HPP

#include "liecensus/lie_type.hpp"

#include <vector>

namespace liecensus {

/// Exact root-system data for a simple type, in Bourbaki simple-root
/// numbering.  Normalization: long roots have squared length 2, so the
/// length factors t_i = (alpha_i, alpha_i)/2 lie in {1, 1/2, 1/3}.
///
/// To keep everything integral, t_i is stored as scaled_t[i] / t_scale
/// with a family-wide scale (1 for the simply-laced types, 2 for B/C/F4,
/// 3 for G2).
struct RootSystemData {
  LieType lie_type;

  /// cartan[i][j] = <alpha_i, alpha_j^vee> = 2(alpha_i,alpha_j)/(alpha_j,alpha_j).
  std::vector<std::vector<int>> cartan;

  /// Positive roots as coefficient vectors over the simple roots, sorted
  /// by height then lexicographically; the first n entries are not the
  /// simple roots in general, but exactly n entries have height 1.
  std::vector<std::vector<int>> positive_roots;

  /// scaled_t[i] = t_i * t_scale, an integer in {1, 2, 3}.
  std::vector<int> scaled_t;
  int t_scale = 1;

  int rank() const { return lie_type.rank; }
  std::size_t positive_count() const { return positive_roots.size(); }
};

/// Build the full positive root set by reflection closure from the Cartan
/// matrix.  Deterministic; throws domain_error for an invalid type.
RootSystemData build_root_system(const LieType& type);

/// Memoized access; the returned reference stays valid for the process
/// lifetime and concurrent calls are safe.
const RootSystemData& root_system(const LieType& type);

/// |Phi^+| by the closed forms (n^2+n)/2, n^2, n^2, n^2-n, 36, 63, 120,
/// 24, 6 -- without materializing the roots.
long long positive_root_count(const LieType& type);

} // namespace liecensus

#endif
