#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace curvelab::cli {

enum ExitCode { Ok = 0, CriteriaFailed = 1, InputError = 2, Partial = 3 };

/// Runs one command line (without the program name); JSON goes to `out`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace curvelab::cli
