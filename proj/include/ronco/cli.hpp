#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "ronco/free_lie.hpp"

namespace ronco::cli {

enum ExitCode : int { kOk = 0, kVerificationFailed = 1, kInputError = 2 };

/// Degree cap from RONCO_MAX_DEGREE, or the default when unset.
Limits limits_from_env();

/// Runs one command line (args excludes the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ronco::cli
