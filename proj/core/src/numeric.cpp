#include "liecensus/numeric.hpp"

#include "liecensus/errors.hpp"

#include <numeric>

namespace liecensus {

Int isqrt(const Int& x) {
  if (x < 0) throw domain_error("isqrt of a negative value");
  return boost::multiprecision::sqrt(x);
}

Int ipow(const Int& base, std::uint64_t exp) {
  Int result = 1;
  Int b = base;
  while (exp != 0) {
    if (exp & 1) result *= b;
    exp >>= 1;
    if (exp != 0) b *= b;
  }
  return result;
}

std::uint64_t bit_length(const Int& x) {
  if (x == 0) return 0;
  return boost::multiprecision::msb(boost::multiprecision::abs(x)) + 1;
}

std::string to_decimal(const Int& x) { return x.str(); }

Int parse_decimal(const std::string& s) {
  if (s.empty()) throw domain_error("empty decimal string");
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) throw domain_error("malformed decimal string: " + s);
  for (; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9') throw domain_error("malformed decimal string: " + s);
  return Int(s);
}

Rational::Rational(long long n, long long d) {
  if (d == 0) throw domain_error("rational with zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  const long long g = std::gcd(n < 0 ? -n : n, d);
  num = g ? n / g : n;
  den = g ? d / g : d;
}

std::string Rational::str() const {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

Rational operator+(Rational a, Rational b) {
  return Rational(a.num * b.den + b.num * a.den, a.den * b.den);
}

} // namespace liecensus
