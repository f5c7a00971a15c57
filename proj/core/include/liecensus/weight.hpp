#ifndef LIECENSUS_WEIGHT_HPP
#define LIECENSUS_WEIGHT_HPP

#include <compare>
#include <string>
#include <vector>

namespace liecensus {

/// Dominant highest weight (a_1, ..., a_n) in fundamental-weight
/// coordinates.  All entries are >= 0; the length equals the rank of the
/// type the weight belongs to.
struct Weight {
  std::vector<int> coeffs;

  Weight() = default;
  explicit Weight(std::vector<int> a) : coeffs(std::move(a)) {}

  int rank() const { return static_cast<int>(coeffs.size()); }

  /// c(w): the largest coordinate (0 for the zero weight).
  int max_entry() const;

  bool is_zero() const;

  /// All entries <= p-1.
  bool is_p_restricted(long long p) const;

  /// "2,5" (the CLI syntax, no spaces).
  std::string str() const;

  auto operator<=>(const Weight&) const = default;
};

/// Parse "2,5" into a weight; throws domain_error on malformed input
/// or negative entries.
Weight parse_weight(const std::string& text);

/// Throws domain_error unless w has the given rank and no negative entry.
void require_dominant(const Weight& w, int rank);

} // namespace liecensus

#endif
