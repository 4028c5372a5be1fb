#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ksix::cli {

/// Exit codes: 0 success, 1 mathematical failure, 2 malformed input.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace ksix::cli
