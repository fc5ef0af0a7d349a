#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace arith::cli {

// Exit statuses.
inline constexpr int kOk = 0;
inline constexpr int kCheckFailed = 1;
inline constexpr int kUsageError = 2;

// Largest bound accepted on the command line.
inline constexpr long long kMaxCliBound = 10'000'000;

/// Runs one command. args excludes the program name. Data goes to out,
/// diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace arith::cli
