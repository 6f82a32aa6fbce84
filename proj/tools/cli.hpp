#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace s2rank::cli {

/// Runs the command line given in args (without the program name).
/// Exit codes: 0 success / consistent, 1 inconsistency detected,
/// 2 usage or parse error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace s2rank::cli
