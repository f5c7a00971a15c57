#include "liecensus/lie_type.hpp"

#include "liecensus/errors.hpp"

namespace liecensus {

std::string family_name(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::C: return "C";
    case Family::D: return "D";
    case Family::E6: return "E6";
    case Family::E7: return "E7";
    case Family::E8: return "E8";
    case Family::F4: return "F4";
    case Family::G2: return "G2";
  }
  throw internal_error("unreachable family");
}

Family parse_family(const std::string& token) {
  for (Family f : all_families)
    if (family_name(f) == token) return f;
  throw domain_error("unknown family '" + token + "' (expected A, B, C, D, E6, E7, E8, F4 or G2)");
}

bool is_exceptional(Family f) {
  return f == Family::E6 || f == Family::E7 || f == Family::E8 || f == Family::F4 ||
         f == Family::G2;
}

int exceptional_rank(Family f) {
  switch (f) {
    case Family::E6: return 6;
    case Family::E7: return 7;
    case Family::E8: return 8;
    case Family::F4: return 4;
    case Family::G2: return 2;
    default: return 0;
  }
}

int min_rank(Family f) {
  switch (f) {
    case Family::A: return 1;
    case Family::B: return 2;
    case Family::C: return 2;
    case Family::D: return 3;
    default: return exceptional_rank(f);
  }
}

int min_canonical_rank(Family f) {
  if (f == Family::C) return 3;
  if (f == Family::D) return 4;
  return min_rank(f);
}

bool LieType::is_valid() const {
  if (is_exceptional(family)) return rank == exceptional_rank(family);
  return rank >= min_rank(family);
}

bool LieType::is_canonical() const {
  return is_valid() && rank >= min_canonical_rank(family);
}

std::string LieType::name() const {
  if (is_exceptional(family)) return family_name(family);
  return family_name(family) + std::to_string(rank);
}

void require_valid(const LieType& t) {
  if (!t.is_valid())
    throw domain_error("invalid rank " + std::to_string(t.rank) + " for family " +
                       family_name(t.family));
}

LieType parse_lie_type(const std::string& token) {
  for (Family f : all_families) {
    const std::string fname = family_name(f);
    if (is_exceptional(f)) {
      if (token == fname) return LieType(f, exceptional_rank(f));
      continue;
    }
    if (token.size() > fname.size() && token.compare(0, fname.size(), fname) == 0) {
      const std::string digits = token.substr(fname.size());
      for (char c : digits)
        if (c < '0' || c > '9') throw domain_error("malformed type name '" + token + "'");
      LieType t(f, std::stoi(digits));
      require_valid(t);
      return t;
    }
  }
  throw domain_error("malformed type name '" + token + "'");
}

} // namespace liecensus
