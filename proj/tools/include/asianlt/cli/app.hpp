#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace asianlt::cli {

/// Process exit codes of the command-line tool.
enum ExitCode : int {
  kSuccess = 0,
  kSelfcheckFailed = 1,
  kInvalidInput = 2,
  kNumericalFailure = 3,
};

/// Parses argv (argv[0] is the program name), runs the selected command and
/// writes its report to `out` (or the --output file) and diagnostics to `err`.
/// Never throws.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace asianlt::cli
