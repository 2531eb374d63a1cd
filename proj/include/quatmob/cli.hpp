#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace quatmob::cli {

/// Exit codes of run().
inline constexpr int kOk = 0;
inline constexpr int kDomainError = 1;
inline constexpr int kParseError = 2;

/// Runs one subcommand. `args` excludes the program name. Writes a single
/// JSON document (or CSV) to `out`; `err` only gets diagnostics.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace quatmob::cli
