#include "owpnf/image_io.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace owpnf {

namespace {

struct RawImage {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> values;
};

void check_scale(double scale) {
    if (!(scale > 0.0) || !std::isfinite(scale)) throw std::invalid_argument("scale must be positive and finite");
}

std::size_t read_dimension(std::istream& in, const char* what) {
    long long v = 0;
    if (!(in >> v) || v <= 0) throw std::runtime_error(std::string("invalid ") + what + " in image header");
    return static_cast<std::size_t>(v);
}

RawImage read_text(std::istream& in, bool integer_header) {
    RawImage raw;
    raw.rows = read_dimension(in, "row count");
    raw.cols = read_dimension(in, "column count");
    raw.values.resize(raw.rows * raw.cols);
    for (std::size_t i = 0; i < raw.values.size(); ++i) {
        if (integer_header) {
            long long v = 0;
            if (!(in >> v)) throw std::runtime_error("truncated count image at value " + std::to_string(i));
            if (v < 0 || v > UINT32_MAX)
                throw std::runtime_error("count " + std::to_string(v) + " at pixel (" + std::to_string(i / raw.cols) +
                                         ", " + std::to_string(i % raw.cols) + ") is out of range");
            raw.values[i] = static_cast<double>(v);
        } else {
            std::string token;
            if (!(in >> token)) throw std::runtime_error("truncated intensity image at value " + std::to_string(i));
            double v = 0.0;
            const auto* end = token.data() + token.size();
            const auto [ptr, ec] = std::from_chars(token.data(), end, v);
            if (ec != std::errc{} || ptr != end) throw std::runtime_error("invalid number '" + token + "' in intensity image");
            raw.values[i] = v;
        }
    }
    std::string extra;
    if (in >> extra) throw std::runtime_error("unexpected trailing data in image file");
    return raw;
}

// Skips whitespace and '#' comments between PGM header fields.
void skip_pgm_space(std::istream& in) {
    for (;;) {
        const int c = in.peek();
        if (c == '#') {
            std::string line;
            std::getline(in, line);
        } else if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
            in.get();
        } else {
            return;
        }
    }
}

RawImage read_pgm(std::istream& in) {
    RawImage raw;
    skip_pgm_space(in);
    raw.cols = read_dimension(in, "width");
    skip_pgm_space(in);
    raw.rows = read_dimension(in, "height");
    skip_pgm_space(in);
    long long maxval = 0;
    if (!(in >> maxval) || maxval <= 0 || maxval > 65535) throw std::runtime_error("invalid PGM maxval");
    in.get();  // single whitespace before the raster
    const std::size_t bytes = maxval > 255 ? 2 : 1;
    std::vector<unsigned char> data(raw.rows * raw.cols * bytes);
    if (!in.read(reinterpret_cast<char*>(data.data()), static_cast<std::streamsize>(data.size())))
        throw std::runtime_error("truncated PGM raster");
    raw.values.resize(raw.rows * raw.cols);
    for (std::size_t i = 0; i < raw.values.size(); ++i) {
        const unsigned v = bytes == 2 ? (unsigned{data[2 * i]} << 8) | data[2 * i + 1] : data[i];
        raw.values[i] = v;
    }
    return raw;
}

RawImage read_any(std::istream& in, ImageFormat& format) {
    format = detect_format(in);
    std::string magic;
    in >> magic;
    switch (format) {
    case ImageFormat::fmat:
        return read_text(in, false);
    case ImageFormat::cmat:
        return read_text(in, true);
    case ImageFormat::pgm:
        return read_pgm(in);
    }
    throw std::logic_error("unhandled image format");
}

std::ofstream open_out(const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
    return out;
}

std::ifstream open_in(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path.string() + "'");
    return in;
}

void finish(std::ofstream& out, const std::filesystem::path& path) {
    out.flush();
    if (!out) throw std::runtime_error("failed writing '" + path.string() + "'");
}

bool is_pgm_path(const std::filesystem::path& path) {
    auto ext = path.extension().string();
    for (auto& c : ext) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return ext == ".pgm";
}

template <typename Gray>
void write_pgm_levels(std::ostream& out, std::size_t rows, std::size_t cols, const std::vector<Gray>& levels) {
    unsigned maxval = 255;
    for (auto g : levels) {
        if (g > 65535) throw std::runtime_error("gray level " + std::to_string(g) + " exceeds 65535; use --scale");
        if (g > 255) maxval = 65535;
    }
    out << "P5\n" << cols << ' ' << rows << '\n' << maxval << '\n';
    for (auto g : levels) {
        if (maxval > 255) out.put(static_cast<char>((g >> 8) & 0xFF));
        out.put(static_cast<char>(g & 0xFF));
    }
}

} // namespace

ImageFormat detect_format(std::istream& in) {
    in >> std::ws;
    char head[2] = {0, 0};
    head[0] = static_cast<char>(in.get());
    head[1] = static_cast<char>(in.peek());
    in.unget();
    if (head[0] == 'P' && head[1] == '5') return ImageFormat::pgm;
    if (head[0] == 'F' && head[1] == 'M') return ImageFormat::fmat;
    if (head[0] == 'C' && head[1] == 'M') return ImageFormat::cmat;
    throw std::runtime_error("unrecognized image format (expected FMAT, CMAT or binary PGM)");
}

IntensityImage read_intensity(std::istream& in, double scale) {
    check_scale(scale);
    ImageFormat format{};
    auto raw = read_any(in, format);
    if (format == ImageFormat::pgm)
        for (auto& v : raw.values) v *= scale;
    return IntensityImage(raw.rows, raw.cols, std::move(raw.values));
}

CountImage read_counts(std::istream& in) {
    ImageFormat format{};
    const auto raw = read_any(in, format);
    std::vector<std::uint32_t> counts(raw.values.size());
    for (std::size_t i = 0; i < counts.size(); ++i) {
        const double v = raw.values[i];
        if (v < 0.0 || v != std::floor(v) || v > UINT32_MAX)
            throw std::runtime_error("value at pixel (" + std::to_string(i / raw.cols) + ", " +
                                     std::to_string(i % raw.cols) + ") is not a nonnegative integer count");
        counts[i] = static_cast<std::uint32_t>(v);
    }
    return CountImage(raw.rows, raw.cols, std::move(counts));
}

void write_fmat(std::ostream& out, const Grid<double>& image) {
    out << "FMAT " << image.rows() << ' ' << image.cols() << '\n';
    char buf[40];
    for (std::size_t r = 0; r < image.rows(); ++r) {
        for (std::size_t c = 0; c < image.cols(); ++c) {
            std::snprintf(buf, sizeof buf, "%.17g", image(r, c));
            if (c) out.put(' ');
            out << buf;
        }
        out.put('\n');
    }
}

void write_cmat(std::ostream& out, const CountImage& image) {
    out << "CMAT " << image.rows() << ' ' << image.cols() << '\n';
    for (std::size_t r = 0; r < image.rows(); ++r) {
        for (std::size_t c = 0; c < image.cols(); ++c) {
            if (c) out.put(' ');
            out << image(r, c);
        }
        out.put('\n');
    }
}

void write_pgm(std::ostream& out, const Grid<double>& image, double scale) {
    check_scale(scale);
    std::vector<std::uint64_t> levels;
    levels.reserve(image.size());
    for (double v : image.values()) {
        const double g = std::round(v / scale);
        if (!(g >= 0.0) || g > 65535.0)
            throw std::runtime_error("value " + std::to_string(v) + " does not fit a 16-bit PGM at scale " +
                                     std::to_string(scale));
        levels.push_back(static_cast<std::uint64_t>(g));
    }
    write_pgm_levels(out, image.rows(), image.cols(), levels);
}

void write_pgm(std::ostream& out, const CountImage& image) {
    std::vector<std::uint64_t> levels(image.values().begin(), image.values().end());
    write_pgm_levels(out, image.rows(), image.cols(), levels);
}

IntensityImage read_intensity_file(const std::filesystem::path& path, double scale) {
    auto in = open_in(path);
    try {
        return read_intensity(in, scale);
    } catch (const std::exception& e) {
        throw std::runtime_error(path.string() + ": " + e.what());
    }
}

CountImage read_counts_file(const std::filesystem::path& path) {
    auto in = open_in(path);
    try {
        return read_counts(in);
    } catch (const std::exception& e) {
        throw std::runtime_error(path.string() + ": " + e.what());
    }
}

void write_intensity_file(const std::filesystem::path& path, const Grid<double>& image, double scale) {
    auto out = open_out(path);
    if (is_pgm_path(path))
        write_pgm(out, image, scale);
    else
        write_fmat(out, image);
    finish(out, path);
}

void write_counts_file(const std::filesystem::path& path, const CountImage& image) {
    auto out = open_out(path);
    if (is_pgm_path(path))
        write_pgm(out, image);
    else
        write_cmat(out, image);
    finish(out, path);
}

} // namespace owpnf
