#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "scnr/verify.hpp"

namespace scnr {

/// Exit codes of the command-line front end.
inline constexpr int kExitOk = 0;
inline constexpr int kExitClaimFailed = 1;
inline constexpr int kExitBadInput = 2;
inline constexpr int kExitCapacity = 3;

struct CliHooks {
  /// Passed through to the verification suite.
  CoefficientTamper tamper;
};

/// Runs one command line (without the program name). Environment variable
/// SCNR_MAX_N may lower the exact-enumeration cap.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
            const CliHooks& hooks = {});

/// Parses "5..15", "6,8,10", "9" or a mix such as "5..9,21".
/// Throws InputError on malformed text.
std::vector<int> parse_order_list(const std::string& text);

}  // namespace scnr
