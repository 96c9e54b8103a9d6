#pragma once

#include <iosfwd>

namespace sylvester {

/// Command-line front end (subcommands: poly, scalar, vector). Results go to
/// `out`, diagnostics to `err`; returns the process exit code (0 only when
/// the computation succeeded and every requested verification matched).
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace sylvester
