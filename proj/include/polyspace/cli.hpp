#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace polyspace::cli {

// Exit codes: 0 success; 2 invalid weights (validation or parse); 3 wall /
// singular input; 4 bad subcommand arguments; 1 internal hard fault.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

int run(int argc, const char* const* argv);

}  // namespace polyspace::cli
