#ifndef GWCPG_CLI_CLI_HPP_
#define GWCPG_CLI_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace gwcpg::cli {

/// Runs the command line `args` (program name excluded). Artifacts go to the
/// --out path when given, otherwise to `out`; diagnostics go to `err`.
/// Returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// "%.17g".
std::string format_double(double v);

}  // namespace gwcpg::cli

#endif  // GWCPG_CLI_CLI_HPP_
