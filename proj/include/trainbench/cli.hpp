#ifndef TRAINBENCH_CLI_HPP
#define TRAINBENCH_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace trainbench {

/// Dispatches the subcommands (lemma, diag, drive, sweep, verify).
/// Exit codes: 0 success/OK, 1 property violation, 2 usage or contract
/// error. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::istream& in,
            std::ostream& out, std::ostream& err);

}  // namespace trainbench

#endif  // TRAINBENCH_CLI_HPP
