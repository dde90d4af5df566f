#ifndef SRKIT_CLI_HPP
#define SRKIT_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace srkit::cli {

/// Process exit codes of the srkit tool.
enum ExitCode : int {
    kOk = 0,
    kCounterexample = 1,
    kParseFailure = 2,
    kGuardFailure = 3,
    kUsageFailure = 4,
};

/// Runs the tool on argv-style arguments (args[0] is the program name).
/// Data goes to `out`, diagnostics to `err`; an input path of "-" reads
/// from `in`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in);

} // namespace srkit::cli

#endif
