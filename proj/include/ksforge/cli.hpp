#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ksforge::cli {

/// Runs one CLI invocation. args excludes the program name. Returns the
/// process exit code: 0 on success, 1 when any input line failed, 2 on
/// usage errors.
int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err);

}  // namespace ksforge::cli
