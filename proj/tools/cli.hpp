#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace equichar::cli {

// argv excludes the program name. Returns 0 on success, 1 on a failed verification, 2 on usage errors.
int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);

}  // namespace equichar::cli
