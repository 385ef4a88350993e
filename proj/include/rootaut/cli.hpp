#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rootaut {

// Runs one command line (without the program name). Returns 0 on success,
// 1 when the library refuses the computation, 2 on a usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rootaut
