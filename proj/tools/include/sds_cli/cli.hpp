#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace sds::cli {

enum ExitCode : int {
  ok = 0,
  disagreement = 1,
  usage_error = 2,
  budget_exhausted = 3,
};

/// Runs the command line `args` (args[0] is the program name). Primary
/// output goes to `out` (or --out), errors to `err` as one JSON line.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sds::cli
