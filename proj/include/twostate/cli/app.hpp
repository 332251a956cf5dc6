#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "twostate/cli/config.hpp"

namespace twostate::cli {

/// Process exit codes.
enum ExitCode : int {
  kExitOk = 0,
  kExitConfigError = 2,
  kExitNumericalFailure = 3,  // quadrature/optimizer failure or a failed check
};

/// Runs the command line `args` (without the program name). Records go to
/// `out` unless the config names an output file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Subcommand bodies, exposed for in-process tests. Each writes its records
/// to `out` in config.format and returns an exit code.
int cmd_eval(const RunConfig& config, std::ostream& out);
int cmd_sweep(const RunConfig& config, std::ostream& out);
int cmd_optimize(const RunConfig& config, std::ostream& out);
int cmd_check(const RunConfig& config, std::ostream& out);

/// printf("%.9g") of value; the fixed numeric format of every CSV cell.
std::string format_number(double value);

}  // namespace twostate::cli
