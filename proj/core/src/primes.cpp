#include "liecensus/primes.hpp"

#include "liecensus/errors.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace liecensus {

bool is_prime(long long n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (long long d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

long long greatest_prime_le(long long x) {
  for (long long n = x; n >= 2; --n)
    if (is_prime(n)) return n;
  return 0;
}

std::vector<std::uint32_t> primes_below(long long x, long long sieve_limit) {
  if (x < 2) throw domain_error("sieve bound must be >= 2");
  if (x > sieve_limit)
    throw resource_limit_error("sieve bound " + std::to_string(x) + " exceeds the limit " +
                               std::to_string(sieve_limit) +
                               "; pass an explicit p limit or use symbolic bounds");
  const long long n = x - 1; // largest value to test
  std::vector<std::uint32_t> primes;
  if (n < 2) return primes;

  // Base primes up to sqrt(n) by a plain sieve.
  const long long root = static_cast<long long>(std::sqrt(static_cast<double>(n))) + 1;
  std::vector<bool> small(root + 1, true);
  small[0] = small[1] = false;
  for (long long i = 2; i * i <= root; ++i)
    if (small[i])
      for (long long j = i * i; j <= root; j += i) small[j] = false;
  std::vector<long long> base;
  for (long long i = 2; i <= root; ++i)
    if (small[i]) base.push_back(i);

  // Segmented sweep.
  constexpr long long segment = 1 << 20;
  std::vector<bool> seg;
  for (long long lo = 2; lo <= n; lo += segment) {
    const long long hi = std::min(n, lo + segment - 1);
    seg.assign(hi - lo + 1, true);
    for (long long p : base) {
      if (p * p > hi) break;
      long long start = std::max(p * p, (lo + p - 1) / p * p);
      for (long long j = start; j <= hi; j += p) seg[j - lo] = false;
    }
    for (long long v = lo; v <= hi; ++v)
      if (seg[v - lo]) primes.push_back(static_cast<std::uint32_t>(v));
  }
  return primes;
}

} // namespace liecensus
