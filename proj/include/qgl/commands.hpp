#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qgl {

/// Dispatches one CLI invocation (without the program name). Symbolic commands
/// print plain text by default; experiment commands print a canonical JSON
/// report. Exit codes: 0 success (verdict true where applicable), 1 verdict
/// false, 2 usage or parse error, 3 numeric failure.
int runCommand(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qgl
