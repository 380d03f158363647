#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hskein::cli {

enum ExitCode { Ok = 0, VerificationFailed = 1, UsageError = 2 };

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hskein::cli
