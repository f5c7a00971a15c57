#include "liecensus/weight.hpp"

#include "liecensus/errors.hpp"

#include <algorithm>

namespace liecensus {

int Weight::max_entry() const {
  int c = 0;
  for (int a : coeffs) c = std::max(c, a);
  return c;
}

bool Weight::is_zero() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](int a) { return a == 0; });
}

bool Weight::is_p_restricted(long long p) const {
  return std::all_of(coeffs.begin(), coeffs.end(),
                     [p](int a) { return static_cast<long long>(a) <= p - 1; });
}

std::string Weight::str() const {
  std::string out;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(coeffs[i]);
  }
  return out;
}

Weight parse_weight(const std::string& text) {
  if (text.empty()) throw domain_error("empty weight");
  std::vector<int> coeffs;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    const std::string part = text.substr(pos, comma - pos);
    if (part.empty()) throw domain_error("malformed weight '" + text + "'");
    for (char c : part)
      if (c < '0' || c > '9') throw domain_error("weight entries must be non-negative integers: '" + text + "'");
    try {
      coeffs.push_back(std::stoi(part));
    } catch (const std::out_of_range&) {
      throw domain_error("weight entry out of range: '" + part + "'");
    }
    pos = comma + 1;
    if (comma == text.size()) break;
  }
  return Weight(std::move(coeffs));
}

void require_dominant(const Weight& w, int rank) {
  if (w.rank() != rank)
    throw domain_error("weight has " + std::to_string(w.rank()) + " entries, rank is " +
                       std::to_string(rank));
  for (int a : w.coeffs)
    if (a < 0) throw domain_error("weight entry is negative");
}

} // namespace liecensus
