#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rtd::cli {

enum ExitCode : int {
  kOk = 0,
  kCertificateFailed = 1,
  kUsageError = 2,
};

// Runs one `rtd` command. `args` excludes the program name. JSON and CSV go
// to `out`, diagnostics to `err`; ColoredGraph input is read from `in`
// unless --input names a file.
int dispatch(const std::vector<std::string>& args, std::istream& in,
             std::ostream& out, std::ostream& err);

}  // namespace rtd::cli
