#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace artin::cli {

inline constexpr const char *kVersion = "1.0.0";
inline constexpr int kFormatVersion = 1;

/// Runs one invocation; `args` excludes the program name.
/// Returns 0 on success, 1 on domain errors and 2 on usage errors.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

std::vector<std::string> subcommands();

} // namespace artin::cli
