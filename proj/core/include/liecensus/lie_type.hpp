#ifndef LIECENSUS_LIE_TYPE_HPP
#define LIECENSUS_LIE_TYPE_HPP

#include <array>
#include <compare>
#include <string>

namespace liecensus {

/// The nine families of simple Lie types.
enum class Family { A, B, C, D, E6, E7, E8, F4, G2 };

constexpr std::array<Family, 9> all_families = {
    Family::A, Family::B, Family::C, Family::D, Family::E6,
    Family::E7, Family::E8, Family::F4, Family::G2};

/// Name of the family as used on the command line ("A", ..., "G2").
std::string family_name(Family f);

/// Inverse of family_name; throws domain_error on an unknown token.
Family parse_family(const std::string& token);

bool is_exceptional(Family f);

/// Fixed rank of an exceptional family (6, 7, 8, 4, 2); 0 for classical.
int exceptional_rank(Family f);

/// A simple Lie family together with its rank.
///
/// Validity ranges: A_n (n >= 1), B_n (n >= 2), C_n (n >= 2), D_n (n >= 3),
/// and the five exceptional types at their fixed ranks.  The canonical
/// ranges C_n (n >= 3), D_n (n >= 4) exclude the duplicate labels
/// B_2 = C_2 and A_3 = D_3.
struct LieType {
  Family family = Family::A;
  int rank = 1;

  LieType() = default;
  LieType(Family f, int n) : family(f), rank(n) {}

  bool is_valid() const;
  bool is_canonical() const;

  /// "A2", "G2", "D4", ...
  std::string name() const;

  auto operator<=>(const LieType&) const = default;
};

/// Smallest valid rank of a family (1, 2, 2, 3, then the fixed ranks).
int min_rank(Family f);

/// Smallest canonical rank (C -> 3, D -> 4, otherwise min_rank).
int min_canonical_rank(Family f);

/// Throws domain_error unless t.is_valid().
void require_valid(const LieType& t);

/// Parse "A2" / "E8" style names; throws domain_error on failure.
LieType parse_lie_type(const std::string& token);

} // namespace liecensus

#endif
