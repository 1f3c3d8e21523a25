#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace parhiggs::cli {

// argv excludes the program name. Writes one JSON report to `out` and
// returns 0 (verdict true), 1 (verdict false) or 2 (input error).
int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);

}  // namespace parhiggs::cli
