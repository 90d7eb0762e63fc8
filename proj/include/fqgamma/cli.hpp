#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fqgamma {

// Runs one command line (program name excluded) against the given streams:
// machine-readable JSON on `out` (always well-formed, also for errors),
// human diagnostics on `err`. Returns the process exit code: 0 success,
// 2 domain/precision/usage error, 3 resource guard, 4 inconclusive
// certification. Never throws.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fqgamma
