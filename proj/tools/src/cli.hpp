#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hunt::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kParse = 2,
  kUnknown = 3,
};

/// Runs the hunt command line. args excludes the program name. Errors go to
/// `err` as one JSON object per line.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace hunt::cli
