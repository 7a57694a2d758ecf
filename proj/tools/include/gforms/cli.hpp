#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gforms::cli {

enum ExitCode : int { kOk = 0, kDomainError = 1, kInputError = 2 };

/// Runs one command. args excludes the program name. The result (or an
/// error object) is written to out as JSON; diagnostics go to err.
/// `in` supplies the job document for `--job -`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in);

}  // namespace gforms::cli
