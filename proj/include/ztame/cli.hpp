#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ztame {

/// Runs one CLI invocation; args[0] is the program name. Returns the exit
/// code: 0 on success, 1 when the corpus has a failing case, 2 on usage,
/// parse or input errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ztame
