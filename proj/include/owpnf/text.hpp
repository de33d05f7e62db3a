#pragma once

#include <charconv>
#include <string>

namespace owpnf {

// Shortest decimal text that parses back to the same double.
inline std::string shortest(double value) {
    char buf[32];
    const auto result = std::to_chars(buf, buf + sizeof buf, value);
    return std::string(buf, result.ptr);
}

} // namespace owpnf
