#ifndef LIECENSUS_CLI_HPP
#define LIECENSUS_CLI_HPP

#include <iosfwd>

namespace liecensus::cli {

/// Exit codes of the command-line front end.
enum ExitCode {
  exit_ok = 0,
  exit_usage = 1,
  exit_mismatch = 2,       // verify-kac found != expected
  exit_resource_limit = 3, // sieve range / bit budget exceeded
  exit_internal = 4,       // internal invariant violation
};

/// Run one CLI invocation.  Output records go to `out` as JSON lines (or
/// CSV/text where a subcommand supports --format); errors go to `err` as
/// structured records.  Identical invocations produce byte-identical
/// output.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace liecensus::cli

#endif
