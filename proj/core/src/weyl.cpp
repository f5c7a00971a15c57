#include "liecensus/weyl.hpp"

#include "liecensus/errors.hpp"

#include <algorithm>

namespace liecensus {

Int weyl_dim(const RootSystemData& rs, const Weight& w) {
  require_dominant(w, rs.rank());
  const int n = rs.rank();

  // Scaled pairings: for alpha = sum b_i alpha_i,
  //   (w + rho, alpha) * t_scale = sum (a_i + 1) b_i scaled_t_i
  //   (rho, alpha)     * t_scale = sum b_i scaled_t_i
  // The scale cancels across the product, so numerator and denominator
  // are accumulated from the scaled factors directly.  Each factor fits
  // in 64 bits for any int-valued weight: b_i <= 6, scaled_t_i <= 3 and
  // the coordinate sum is bounded by rank * 18 * (c+1).
  Int num = 1;
  Int den = 1;
  for (const auto& b : rs.positive_roots) {
    long long fn = 0;
    long long fd = 0;
    for (int i = 0; i < n; ++i) {
      if (b[i] == 0) continue;
      const long long bt = static_cast<long long>(b[i]) * rs.scaled_t[i];
      fn += (static_cast<long long>(w.coeffs[i]) + 1) * bt;
      fd += bt;
    }
    num *= fn;
    den *= fd;
  }
  Int q, rem;
  boost::multiprecision::divide_qr(num, den, q, rem);
  if (rem != 0)
    throw internal_error("Weyl product is not an integer for " + rs.lie_type.name() + " weight " +
                         w.str());
  return q;
}

Int weyl_dim(const LieType& type, const Weight& w) { return weyl_dim(root_system(type), w); }

Int bn1_bound(const LieType& type, const Weight& w) {
  require_valid(type);
  require_dominant(w, type.rank);
  const long long l = positive_root_count(type);
  return ipow(Int(w.max_entry() + 1), static_cast<std::uint64_t>(l));
}

Weight dual_weight(const LieType& type, const Weight& w) {
  require_valid(type);
  require_dominant(w, type.rank);
  Weight out = w;
  switch (type.family) {
    case Family::A:
      std::reverse(out.coeffs.begin(), out.coeffs.end());
      break;
    case Family::D:
      if (type.rank % 2 == 1) std::swap(out.coeffs[type.rank - 2], out.coeffs[type.rank - 1]);
      break;
    case Family::E6:
      std::swap(out.coeffs[0], out.coeffs[5]); // 1 <-> 6
      std::swap(out.coeffs[2], out.coeffs[4]); // 3 <-> 5
      break;
    default:
      break; // -w0 acts trivially
  }
  return out;
}

bool is_self_dual(const LieType& type, const Weight& w) { return dual_weight(type, w) == w; }

} // namespace liecensus
