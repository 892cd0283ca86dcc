#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lrc::cli {

inline constexpr const char* kVersion = "0.1.0";

/// Runs the `lrc` command line. `args` excludes the program name. Returns the
/// exit status: 0 on success, 1 on a library error, 2 on a usage error.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace lrc::cli
