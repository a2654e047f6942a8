#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace eqs {

// Exit codes.
inline constexpr int kExitPass = 0;
inline constexpr int kExitFinding = 1;   // a counterexample or failed identity
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInternal = 3;  // an exception the arguments cannot explain

// `args` excludes the program name. Default --jobs comes from EQS_JOBS.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace eqs
