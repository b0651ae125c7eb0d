#pragma once
#include <ostream>
#include <string>
#include <vector>

namespace tripods::cli {

enum ExitCode { ok = 0, failure = 1, usage = 2, overflow = 3, invalid_tripod = 4 };

/// Runs one command line (args exclude the program name). Reports go to
/// `out` unless --out is given; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tripods::cli
