#ifndef BCKCODE_CLI_HPP
#define BCKCODE_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace bck::cli {

/// Exit-code contract shared by every command.
enum ExitCode : int {
  kHolds = 0,   // the checked property holds
  kFails = 1,   // the property fails; witnesses were printed
  kUsage = 2,   // malformed input, bad flags, or a refused search
};

/// Runs the command line `args` (args[0] is the program name) and returns
/// the process exit code. Regular output goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bck::cli

#endif  // BCKCODE_CLI_HPP
