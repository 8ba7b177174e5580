#pragma once

#include <ostream>

#include "ncst/error.hpp"

namespace ncst {

enum ExitCode { kExitOk = 0, kExitInput = 1, kExitAlgorithm = 2, kExitResource = 3 };

ExitCode exit_code_for(ErrorKind kind);

/// Entry point of the ncst command; returns the process exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ncst
