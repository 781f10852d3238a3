#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace orbiform::cli {

// args excludes the program name. Returns the process exit code:
// 0 success, 2 invalid input / failed verification / usage error, 1 internal.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace orbiform::cli
