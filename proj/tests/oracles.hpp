#ifndef LIECENSUS_TESTS_ORACLES_HPP
#define LIECENSUS_TESTS_ORACLES_HPP

// Independent oracles used by the test suites.  Everything here is
// deliberately written from first principles (raising by simple
// reflections, box scans, squaring comparisons) and stays out of the
// library's code paths.

#include "liecensus/census.hpp"
#include "liecensus/numeric.hpp"
#include "liecensus/root_system.hpp"
#include "liecensus/weight.hpp"
#include "liecensus/weyl.hpp"

#include <algorithm>
#include <vector>

namespace oracles {

using liecensus::Int;

/// Dominant representative of a (possibly non-dominant) integral weight,
/// computed by repeatedly reflecting any negative coordinate upward:
/// s_i(v)_j = v_j - v_i * cartan[i][j].  Terminates in at most |Phi^+|
/// steps.
inline std::vector<int> dominant_representative(const liecensus::RootSystemData& rs,
                                                std::vector<int> v) {
  const int n = rs.rank();
  for (;;) {
    int i = -1;
    for (int j = 0; j < n; ++j)
      if (v[j] < 0) {
        i = j;
        break;
      }
    if (i < 0) return v;
    const int vi = v[i];
    for (int j = 0; j < n; ++j) v[j] -= vi * rs.cartan[i][j];
  }
}

/// Longest-element oracle for the dual weight: -w0(w) is the dominant
/// representative of -w.
inline liecensus::Weight dual_by_longest_element(const liecensus::LieType& type,
                                                 const liecensus::Weight& w) {
  const auto& rs = liecensus::root_system(type);
  std::vector<int> neg;
  neg.reserve(w.coeffs.size());
  for (int a : w.coeffs) neg.push_back(-a);
  return liecensus::Weight(dominant_representative(rs, std::move(neg)));
}

/// Brute-force census over the full coefficient box {0..D}^n.
inline std::vector<liecensus::CensusEntry> box_scan(const liecensus::LieType& type, long long D) {
  const auto& rs = liecensus::root_system(type);
  const int n = rs.rank();
  std::vector<liecensus::CensusEntry> out;
  std::vector<int> w(n, 0);
  for (;;) {
    const Int d = liecensus::weyl_dim(rs, liecensus::Weight(w));
    if (d <= D) out.push_back({type, liecensus::Weight(w), d});
    int pos = n - 1;
    while (pos >= 0 && w[pos] == D) w[pos--] = 0;
    if (pos < 0) break;
    ++w[pos];
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Exact check that f = floor((m1 sqrt(s1) + m2 sqrt(s2)) * base^(num/den))
/// by cross-multiplied squaring; terms beyond the second must be absent.
/// Handles num >= 0 with den in {1, 2}.
inline bool floor_is_exact(const std::vector<std::pair<long long, long long>>& terms,
                           long long base, long long num, long long den, const Int& f) {
  const Int bp = liecensus::ipow(Int(base),
                                 static_cast<std::uint64_t>(num) * (den == 1 ? 2 : 1));
  std::vector<Int> T;
  for (auto [m, s] : terms) T.push_back(Int(m) * m * s * bp);
  auto ge = [&](const Int& M) {
    if (M <= 0) return true;
    if (T.size() == 1) return T[0] >= M * M;
    const Int K = M * M - T[0] - T[1];
    if (K <= 0) return true;
    return 4 * T[0] * T[1] >= K * K;
  };
  return ge(f) && !ge(f + 1);
}

/// Plain trial-division prime list (strictly below x).
inline std::vector<long long> primes_by_trial_division(long long x) {
  std::vector<long long> out;
  for (long long n = 2; n < x; ++n) {
    bool prime = n >= 2;
    for (long long d = 2; d * d <= n; ++d)
      if (n % d == 0) {
        prime = false;
        break;
      }
    if (prime) out.push_back(n);
  }
  return out;
}

} // namespace oracles

#endif
