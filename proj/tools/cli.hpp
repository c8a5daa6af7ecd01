#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace qtmoments::cli {

/// Runs one invocation; argv excludes the program name.
/// Returns 0 on success, 1 when a cross-check disagrees, 2 on usage errors.
int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);

}  // namespace qtmoments::cli
