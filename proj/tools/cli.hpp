#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ccc::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kIo = 2, kAlgorithm = 3 };

/// Runs one command line (args excludes the program name). Errors are
/// reported on `err` as a single line starting with "error[usage]:",
/// "error[io]:" or "error[algorithm]:".
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ccc::cli
