#ifndef GLACALC_TOOLS_CLI_HPP
#define GLACALC_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace glacalc::cli {

/// Parses the argument vector (without argv[0]), runs the command against
/// the definition file, and writes the report to `out` and diagnostics to
/// `err`.  Returns the process exit code: 0 for pass/success, 1 for a
/// mathematical failure (failed check or calculation error), 2 for usage
/// and parse errors.  Output is byte-stable for fixed (input, command,
/// options).
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace glacalc::cli

#endif
