#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace equigen::cli {

// Runs one invocation; `args` excludes the program name. Returns the exit
// code: 0 success/holds/deforms, 1 fails/does not deform, 2 error/timeout.
int runCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// "3", "2..5"; both ends inclusive.
std::pair<int, int> parseRange(const std::string& text);

}  // namespace equigen::cli
