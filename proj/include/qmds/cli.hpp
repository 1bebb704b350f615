#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qmds::cli {

enum ExitCode : int {
    kSuccess = 0,
    kVerificationFailure = 1,
    kInvalidParameters = 2,
    kIoError = 3,
};

/// Environment variable overriding the GF(q^2) element-count bound.
inline constexpr const char* kElementBoundEnv = "QMDS_ELEMENT_BOUND";

/// Runs one command line (without the program name). Machine-readable
/// results go to `out`, diagnostics and usage text to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qmds::cli
