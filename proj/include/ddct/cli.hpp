#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ddct::cli {

/// Runs one `ddct` command. `args` excludes the program name. Returns the
/// process exit status: 0 success, 1 internal invariant failure, 2 bad input.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace ddct::cli
