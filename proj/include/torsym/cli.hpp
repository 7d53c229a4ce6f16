#pragma once

#include <ostream>
#include <span>
#include <string>

namespace torsym::cli {

// Exit codes of every verb.
inline constexpr int kOk = 0;
inline constexpr int kDomainError = 1;
inline constexpr int kParseError = 2;

inline constexpr const char* kReportSchema = "torsym-report/1";
inline constexpr std::size_t kDefaultSizeGuard = 12;

// Runs one command line (without the program name). Primary output goes to
// `out` unless --output names a file; diagnostics go to `err`.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace torsym::cli
