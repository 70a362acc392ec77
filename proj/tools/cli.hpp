#ifndef MAXNORM_TOOLS_CLI_HPP
#define MAXNORM_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace maxnorm::cli
{

enum ExitCode : int
{
  kVerified = 0,
  kConclusionFailed = 1,
  kHypothesesNotMet = 2,
  kResourceCap = 3,
  kUsage = 64,
};

/// Runs the command line `args` (without the program name). Reports go to
/// `out`, diagnostics to `err`.
int run(std::vector<std::string> const &args, std::ostream &out, std::ostream &err);

} // namespace maxnorm::cli

#endif // MAXNORM_TOOLS_CLI_HPP
