#ifndef LIECENSUS_NUMERIC_HPP
#define LIECENSUS_NUMERIC_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace liecensus {

/// Arbitrary-precision signed integer.  Every dimension, bound floor and
/// group order in the library is one of these; no floating point is used
/// anywhere in a computation whose result is reported.
using Int = boost::multiprecision::cpp_int;

/// Integer square root: largest s with s*s <= x.  Requires x >= 0.
Int isqrt(const Int& x);

/// Exact power with non-negative exponent.
Int ipow(const Int& base, std::uint64_t exp);

/// Number of bits in |x| (0 for x == 0).
std::uint64_t bit_length(const Int& x);

/// Decimal rendering (the interchange format for big values).
std::string to_decimal(const Int& x);

/// Parse a decimal string; throws domain_error on malformed input.
Int parse_decimal(const std::string& s);

/// Small exact rational used for bound exponents, kept reduced with den > 0.
struct Rational {
  long long num = 0;
  long long den = 1;

  Rational() = default;
  Rational(long long n, long long d);

  bool is_integer() const { return den == 1; }
  bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
  bool operator!=(const Rational& o) const { return !(*this == o); }

  std::string str() const;
};

Rational operator+(Rational a, Rational b);

} // namespace liecensus

#endif
