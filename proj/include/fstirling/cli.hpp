#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fstirling::cli {

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kUsage = 2 };

/// Default and ceiling for `verify --max-n`; FSTIRLING_MAX_N replaces the
/// ceiling and lifts the per-suite cost caps.
constexpr long kDefaultMaxN = 10;
constexpr long kMaxNCeiling = 20;

/// Runs `fstirling <command> [flags]`; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fstirling::cli
