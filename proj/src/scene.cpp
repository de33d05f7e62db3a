#include "owpnf/noise.hpp"

#include "owpnf/text.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace owpnf {

namespace {

constexpr std::size_t spot_grid = 4;
constexpr std::size_t ridge_count = 9;

double parse_number(std::string_view text) {
    double value = 0.0;
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc{} || ptr != end) throw std::invalid_argument("bad number in scene spec: '" + std::string(text) + "'");
    return value;
}

std::vector<std::string_view> split_fields(std::string_view text) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    for (;;) {
        const auto pos = text.find(':', start);
        fields.push_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return fields;
}

// Value at fraction t in [0, 1] between low and high, geometric when both are positive.
double spaced(double low, double high, double t) {
    if (low > 0.0 && high > 0.0) return low * std::pow(high / low, t);
    return low + (high - low) * t;
}

// Gaussian ridge cross-section cut off at 4 sigma so that the background is exact.
double ridge_profile(double distance, double sigma) {
    if (std::abs(distance) > 4.0 * sigma) return 0.0;
    return std::exp(-distance * distance / (2.0 * sigma * sigma));
}

std::vector<double> spots(const SceneSpec& s) {
    std::vector<double> v(s.rows * s.cols, s.background);
    const double cell_h = static_cast<double>(s.rows) / spot_grid;
    const double cell_w = static_cast<double>(s.cols) / spot_grid;
    const double r_max = std::max(1.0, 0.4 * std::min(cell_h, cell_w));
    const double r_min = std::min(1.0, r_max);
    const std::size_t count = spot_grid * spot_grid;
    for (std::size_t k = 0; k < count; ++k) {
        const double amplitude = spaced(s.low, s.high, static_cast<double>(k) / (count - 1));
        // Stride 7 through the radius ladder decorrelates radius and amplitude.
        const double radius = spaced(r_min, r_max, static_cast<double>((k * 7) % count) / (count - 1));
        const auto cr = static_cast<std::ptrdiff_t>(std::floor(cell_h * (k / spot_grid + 0.5)));
        const auto cc = static_cast<std::ptrdiff_t>(std::floor(cell_w * (k % spot_grid + 0.5)));
        const auto reach = static_cast<std::ptrdiff_t>(std::ceil(radius));
        for (std::ptrdiff_t r = cr - reach; r <= cr + reach; ++r) {
            for (std::ptrdiff_t c = cc - reach; c <= cc + reach; ++c) {
                if (r < 0 || c < 0 || r >= static_cast<std::ptrdiff_t>(s.rows) || c >= static_cast<std::ptrdiff_t>(s.cols))
                    continue;
                const double d2 = static_cast<double>((r - cr) * (r - cr) + (c - cc) * (c - cc));
                if (d2 <= radius * radius) v[static_cast<std::size_t>(r) * s.cols + static_cast<std::size_t>(c)] = amplitude;
            }
        }
    }
    return v;
}

std::vector<double> ridges(const SceneSpec& s) {
    std::vector<double> v(s.rows * s.cols, s.background);
    const double sigma = std::max(0.75, 0.012 * static_cast<double>(s.cols));
    std::vector<double> centers;
    std::vector<double> peaks;
    for (std::size_t k = 0; k < ridge_count; ++k) {
        centers.push_back(std::round(static_cast<double>(s.cols) * (k + 1) / (ridge_count + 1)));
        peaks.push_back(s.low + (s.high - s.low) * k / (ridge_count - 1));
    }
    // Inclined ridge from 85% height at the left edge to 55% height at the right edge.
    const double r0 = 0.85 * static_cast<double>(s.rows);
    const double r1 = 0.55 * static_cast<double>(s.rows);
    const double dr = r1 - r0;
    const double dc = static_cast<double>(s.cols);
    const double norm = std::hypot(dr, dc);
    for (std::size_t r = 0; r < s.rows; ++r) {
        for (std::size_t c = 0; c < s.cols; ++c) {
            double value = s.background;
            for (std::size_t k = 0; k < ridge_count; ++k) {
                value = std::max(value, s.background + (peaks[k] - s.background) *
                                                           ridge_profile(static_cast<double>(c) - centers[k], sigma));
            }
            const double dist = (dc * (static_cast<double>(r) - r0) - dr * static_cast<double>(c)) / norm;
            value = std::max(value, s.background + (s.incline - s.background) * ridge_profile(dist, sigma));
            v[r * s.cols + c] = value;
        }
    }
    return v;
}

std::vector<double> gradient(const SceneSpec& s) {
    std::vector<double> v(s.rows * s.cols);
    for (std::size_t r = 0; r < s.rows; ++r) {
        for (std::size_t c = 0; c < s.cols; ++c) {
            const double t = s.cols > 1 ? static_cast<double>(c) / static_cast<double>(s.cols - 1) : 0.0;
            v[r * s.cols + c] = s.low + (s.high - s.low) * t;
        }
    }
    return v;
}

} // namespace

SceneSpec default_scene(SceneKind kind, std::size_t rows, std::size_t cols) {
    SceneSpec s;
    s.kind = kind;
    s.rows = rows;
    s.cols = cols;
    switch (kind) {
    case SceneKind::spots:
        s.low = 0.08, s.high = 4.99, s.background = 0.03;
        break;
    case SceneKind::ridges:
        s.low = 0.1, s.high = 0.5, s.background = 0.05, s.incline = 0.3;
        break;
    case SceneKind::constant:
        s.low = s.high = s.background = 4.0;
        break;
    case SceneKind::gradient:
        s.low = 0.5, s.high = 5.0, s.background = 0.5;
        break;
    }
    return s;
}

SceneSpec parse_scene(std::string_view text, std::size_t rows, std::size_t cols) {
    const auto fields = split_fields(text);
    const auto name = fields.front();
    const std::size_t args = fields.size() - 1;
    auto arg = [&](std::size_t i) { return parse_number(fields[i + 1]); };
    SceneSpec s;
    if (name == "spots") {
        s = default_scene(SceneKind::spots, rows, cols);
        if (args != 0 && args != 3) throw std::invalid_argument("spots takes low:high:background");
        if (args == 3) s.low = arg(0), s.high = arg(1), s.background = arg(2);
    } else if (name == "ridges") {
        s = default_scene(SceneKind::ridges, rows, cols);
        if (args != 0 && args != 4) throw std::invalid_argument("ridges takes low:high:background:incline");
        if (args == 4) s.low = arg(0), s.high = arg(1), s.background = arg(2), s.incline = arg(3);
    } else if (name == "constant") {
        s = default_scene(SceneKind::constant, rows, cols);
        if (args != 1) throw std::invalid_argument("constant takes a level, e.g. constant:4");
        s.low = s.high = s.background = arg(0);
    } else if (name == "gradient") {
        s = default_scene(SceneKind::gradient, rows, cols);
        if (args != 0 && args != 2) throw std::invalid_argument("gradient takes low:high");
        if (args == 2) s.low = arg(0), s.high = arg(1), s.background = s.low;
    } else {
        throw std::invalid_argument("unknown scene '" + std::string(name) + "'");
    }
    for (double v : {s.low, s.high, s.background, s.incline}) {
        if (!std::isfinite(v) || v < 0.0) throw std::invalid_argument("scene levels must be finite and nonnegative");
    }
    if (rows == 0 || cols == 0) throw std::invalid_argument("scene dimensions must be positive");
    return s;
}

std::string to_string(const SceneSpec& s) {
    switch (s.kind) {
    case SceneKind::spots:
        return "spots:" + shortest(s.low) + ":" + shortest(s.high) + ":" + shortest(s.background);
    case SceneKind::ridges:
        return "ridges:" + shortest(s.low) + ":" + shortest(s.high) + ":" + shortest(s.background) + ":" +
               shortest(s.incline);
    case SceneKind::constant:
        return "constant:" + shortest(s.low);
    case SceneKind::gradient:
        return "gradient:" + shortest(s.low) + ":" + shortest(s.high);
    }
    return {};
}

IntensityImage generate_scene(const SceneSpec& spec) {
    std::vector<double> values;
    switch (spec.kind) {
    case SceneKind::spots:
        values = spots(spec);
        break;
    case SceneKind::ridges:
        values = ridges(spec);
        break;
    case SceneKind::constant:
        values.assign(spec.rows * spec.cols, spec.low);
        break;
    case SceneKind::gradient:
        values = gradient(spec);
        break;
    }
    return IntensityImage(spec.rows, spec.cols, std::move(values));
}

} // namespace owpnf
