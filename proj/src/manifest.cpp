#include "owpnf/manifest.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace owpnf {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::uint64_t parse_seed(std::string_view text) {
    std::uint64_t v = 0;
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, v);
    if (text.empty() || ec != std::errc{} || ptr != end) throw std::invalid_argument("invalid seed '" + std::string(text) + "'");
    return v;
}

} // namespace

KeyValues parse_key_values(std::string_view text) {
    KeyValues out;
    std::size_t line_no = 0;
    while (!text.empty()) {
        ++line_no;
        const auto eol = text.find('\n');
        auto line = text.substr(0, eol);
        text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string_view::npos)
            throw std::invalid_argument("line " + std::to_string(line_no) + ": expected 'key = value'");
        const auto key = trim(line.substr(0, eq));
        if (key.empty()) throw std::invalid_argument("line " + std::to_string(line_no) + ": empty key");
        out.emplace_back(std::string(key), std::string(trim(line.substr(eq + 1))));
    }
    return out;
}

KeyValues read_key_values(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path.string() + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    try {
        return parse_key_values(buffer.str());
    } catch (const std::exception& e) {
        throw std::invalid_argument(path.string() + ": " + e.what());
    }
}

std::vector<std::uint64_t> parse_seed_list(std::string_view text) {
    text = trim(text);
    std::vector<std::uint64_t> seeds;
    if (const auto dots = text.find(".."); dots != std::string_view::npos) {
        const auto first = parse_seed(trim(text.substr(0, dots)));
        const auto last = parse_seed(trim(text.substr(dots + 2)));
        if (last < first) throw std::invalid_argument("seed range is empty");
        for (auto s = first; s <= last; ++s) seeds.push_back(s);
        return seeds;
    }
    std::size_t start = 0;
    while (start < text.size()) {
        const auto end = text.find_first_of(", \t", start);
        const auto token = text.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start);
        if (!token.empty()) seeds.push_back(parse_seed(token));
        if (end == std::string_view::npos) break;
        start = end + 1;
    }
    return seeds;
}

std::vector<std::string> parse_scene_list(std::string_view text) {
    std::vector<std::string> scenes;
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto end = text.find(',', start);
        const auto token = trim(text.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start));
        if (!token.empty()) scenes.emplace_back(token);
        if (end == std::string_view::npos) break;
        start = end + 1;
    }
    return scenes;
}

} // namespace owpnf
