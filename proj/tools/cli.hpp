#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace toric::cli {

enum ExitCode : int {
    ok = 0,
    fact_mismatch = 1,
    input_error = 2,
    cap_exceeded = 3,
    internal_error = 4,
};

/// Runs one command line (without the program name). Reports go to `out`,
/// diagnostics to `err`; with --json errors are written to `out` as JSON.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace toric::cli
