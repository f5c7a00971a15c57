#ifndef LIECENSUS_ERRORS_HPP
#define LIECENSUS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace liecensus {

/// Invalid input: bad rank for a family, malformed weight, non-prime
/// argument, rank outside a formula's stated range, and the like.
class domain_error : public std::invalid_argument {
public:
  explicit domain_error(const std::string& what) : std::invalid_argument(what) {}
};

/// Request exceeds a configured resource limit (sieve bound, bit budget
/// for a floor evaluation).  The caller can retry with an override or
/// fall back to symbolic output.
class resource_limit_error : public std::runtime_error {
public:
  explicit resource_limit_error(const std::string& what) : std::runtime_error(what) {}
};

/// An internal invariant failed (e.g. a Weyl product that does not
/// reduce to an integer).  Always a bug, never a user error.
class internal_error : public std::logic_error {
public:
  explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

} // namespace liecensus

#endif
