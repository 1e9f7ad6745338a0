#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sfc::cli {

/// Process exit codes. Each failure class has its own code; the reason is
/// printed to stderr as one JSON line {"error", "exit_code", "message"}.
enum ExitCode : int {
    kOk = 0,
    kInternal = 1,
    kConstraintViolated = 2,
    kInvalidInput = 3,
    kDivergence = 4,
    kNotFound = 5,
    kInfeasible = 6,
    kIoError = 7,
    kNumericError = 8,
};

/// Runs sfc_lab with args (program name excluded), writing to out/err instead
/// of the process streams.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sfc::cli
