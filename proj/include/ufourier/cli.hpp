#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ufourier::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;    // bad arguments, unreadable input
inline constexpr int kExitNumeric = 2;  // NoHit, quota, failed verification

// args[0] is the program name. Results go to the --out files, or to out.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ufourier::cli
