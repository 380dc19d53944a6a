#pragma once

#include <string>
#include <vector>

namespace cauchybv::cli {

// Runs the command-line interface on argv-style arguments (program name
// excluded).  Returns the process exit code:
//   0 success, 2 configuration error, 3 inconclusive classification,
//   4 numerical-quality warnings elevated by --strict.
int run(const std::vector<std::string>& args);

}  // namespace cauchybv::cli
