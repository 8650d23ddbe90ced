#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bmg::cli {

enum ExitCode : int { kOk = 0, kNegative = 1, kError = 2 };

/// Runs one `bmgtool` invocation. `args` excludes the program name.
/// Exit codes: 0 success / found / not bad, 1 a valid negative answer
/// (infeasible, bad, mismatch), 2 usage or input error.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace bmg::cli
