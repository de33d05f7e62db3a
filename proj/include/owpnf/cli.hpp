#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace owpnf::cli {

inline constexpr const char* tool_version = "owpnf 1.0.0";

// Runs one command line (without the program name). Results and the resolved
// configuration go to `out`, diagnostics and timings to `err`. Returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace owpnf::cli
