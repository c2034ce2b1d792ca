#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace slisim::cli {

// Runs the slisim command line. Returns 0 on success, 1 for domain/runtime
// errors, 2 for usage errors (bad flags, unknown formats).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace slisim::cli
