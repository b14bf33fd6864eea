#pragma once

#include <iosfwd>
#include <string_view>

namespace dtt::cli {

inline constexpr std::string_view tool_version = "1.0.0";

enum ExitCode : int { ok = 0, claims_failed = 1, usage_error = 2 };

/// Runs one command line. Data goes to `out`, diagnostics to `err`.
int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

} // namespace dtt::cli
