#ifndef OVERCHEV_CLI_HPP
#define OVERCHEV_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace overchev::cli {

/// Registered subcommand names (for the coverage audit).
std::vector<std::string> subcommands();
std::vector<std::string> verify_suites();

/// Parse and dispatch.  Returns 0 on success, 1 on verification failure,
/// 2 on invalid input.  All report bytes go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run_main(int argc, char** argv);

}  // namespace overchev::cli

#endif
