#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace gkm::cli {

/// Exit codes: 0 pass, 1 check failure or obstruction, 2 usage/parse error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gkm::cli
