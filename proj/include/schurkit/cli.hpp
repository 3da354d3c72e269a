#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace schurkit {

/// Runs one CLI invocation. args excludes the program name. Returns the
/// process exit code: 0 on success, 1 on a computation-domain error, 2 on a
/// usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace schurkit
