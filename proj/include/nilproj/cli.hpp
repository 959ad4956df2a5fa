#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nilproj::cli {

inline constexpr const char* kToolVersion = "nilproj 1.0.0";

/// Dispatches the nilproj subcommands. Returns 0 on success, 1 on domain
/// errors, 2 on usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nilproj::cli
