#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace conefn::cli {

constexpr const char* kToolVersion = "0.1.0";

/// Exit codes: 0 success / PASS / SKIP, 1 usage or parse error,
/// 2 domain or precondition error, 3 verification FAIL.
enum ExitCode : int { kOk = 0, kUsage = 1, kDomain = 2, kFail = 3 };

/// Runs the command line (args excludes the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace conefn::cli
