#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace owpnf {

using KeyValues = std::vector<std::pair<std::string, std::string>>;

// Flat "key = value" text: one entry per line, '#' starts a comment, blank lines ignored.
KeyValues parse_key_values(std::string_view text);
KeyValues read_key_values(const std::filesystem::path& path);

// "1,2,3", "1 2 3" or an inclusive range "1..5".
std::vector<std::uint64_t> parse_seed_list(std::string_view text);

// Comma-separated scene specs, e.g. "spots, ridges, constant:4".
std::vector<std::string> parse_scene_list(std::string_view text);

} // namespace owpnf
