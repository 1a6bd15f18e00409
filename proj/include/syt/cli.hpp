#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace syt::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_verification_failed = 1;
inline constexpr int exit_usage = 2;

// Runs one invocation; `args` excludes the program name. Results go to
// `out` (or the --out file), diagnostics to `err`.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace syt::cli
