#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qrlab::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitViolations = 1;
inline constexpr int kExitError = 2;

/// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qrlab::cli
