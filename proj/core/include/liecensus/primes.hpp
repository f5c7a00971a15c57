#ifndef LIECENSUS_PRIMES_HPP
#define LIECENSUS_PRIMES_HPP

#include <cstdint>
#include <vector>

namespace liecensus {

inline constexpr long long default_sieve_limit = 1'000'000'000;

/// Ascending list of all primes strictly below x, by segmented sieve of
/// Eratosthenes.  Requires x >= 2; refuses x beyond the sieve limit with
/// resource_limit_error rather than degrading to probabilistic primality.
std::vector<std::uint32_t> primes_below(long long x,
                                        long long sieve_limit = default_sieve_limit);

/// Deterministic trial-division primality test for n within the sieve
/// range (n <= limit^2 would still be exact, but callers stay below the
/// sieve limit).
bool is_prime(long long n);

/// Greatest prime <= x, or 0 if there is none (x < 2).
long long greatest_prime_le(long long x);

} // namespace liecensus

#endif
