#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cmt::cli {

enum ExitCode : int {
  kOk = 0,
  kInvalidInput = 1,
  kCapExceeded = 2,
  kFixtureMismatch = 3,
};

/// Runs one command line (without the program name). Normal output goes to
/// `out`, diagnostics and usage text to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cmt::cli
