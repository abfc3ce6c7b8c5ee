#pragma once

#include "ncspace/cli/report.hpp"

#include <iosfwd>
#include <string>

namespace ncspace::cli {

enum ExitCode : int { kExitPass = 0, kExitFail = 1, kExitError = 2 };

/// Canonical text of the parsed and evaluated expression. Throws
/// expr::ParseError, expr::IndexRangeError or algebra errors.
std::string cmd_eval(const std::string& expression, int dimension);

/// Runs the selected suites, prints the summary to `out`, writes the JSON and
/// CSV files when configured and returns the report.
Report cmd_verify(const RunConfig& config, std::ostream& out);

/// Exit-code wrappers used by the executable: errors are reported on `err`.
int run_eval(const std::string& expression, int dimension, std::ostream& out, std::ostream& err);
int run_verify(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace ncspace::cli
