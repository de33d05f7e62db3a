#include "owpnf/grid.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

namespace owpnf {

namespace {

std::vector<double> checked_intensities(std::size_t rows, std::size_t cols, std::vector<double> values) {
    if (cols != 0) {
        for (std::size_t i = 0; i < values.size(); ++i) {
            const double v = values[i];
            if (!std::isfinite(v) || v < 0.0) {
                throw std::invalid_argument("intensity " + std::to_string(v) + " at pixel (" +
                                            std::to_string(i / cols) + ", " + std::to_string(i % cols) +
                                            ") must be finite and nonnegative");
            }
        }
    }
    (void)rows;
    return values;
}

} // namespace

IntensityImage::IntensityImage(std::size_t rows, std::size_t cols, std::vector<double> values)
    : Grid(rows, cols, checked_intensities(rows, cols, std::move(values))) {}

IntensityImage::IntensityImage(std::size_t rows, std::size_t cols, double fill)
    : IntensityImage(rows, cols, std::vector<double>(rows * cols, fill)) {}

IntensityImage to_intensity(const CountImage& counts) {
    std::vector<double> values(counts.values().begin(), counts.values().end());
    return IntensityImage(counts.rows(), counts.cols(), std::move(values));
}

ExtendedImage::ExtendedImage(const Grid<double>& image, std::size_t radius)
    : rows_(image.rows()), cols_(image.cols()), radius_(radius) {
    fill(image);
}

ExtendedImage::ExtendedImage(const Grid<std::uint32_t>& image, std::size_t radius)
    : rows_(image.rows()), cols_(image.cols()), radius_(radius) {
    fill(image);
}

template <typename T>
void ExtendedImage::fill(const Grid<T>& image) {
    if (radius_ > 0 && radius_ >= std::min(rows_, cols_)) {
        throw std::invalid_argument("boundary extension radius " + std::to_string(radius_) +
                                    " must be smaller than the image side " +
                                    std::to_string(std::min(rows_, cols_)));
    }
    const auto r = static_cast<std::ptrdiff_t>(radius_);
    const auto n_rows = static_cast<std::ptrdiff_t>(rows_);
    const auto n_cols = static_cast<std::ptrdiff_t>(cols_);
    buffer_.resize(static_cast<std::size_t>((n_rows + 2 * r) * stride()));
    auto out = buffer_.begin();
    for (std::ptrdiff_t row = -r; row < n_rows + r; ++row) {
        const auto src_row = static_cast<std::size_t>(reflect_index(row, n_rows));
        for (std::ptrdiff_t col = -r; col < n_cols + r; ++col) {
            *out++ = static_cast<double>(image(src_row, static_cast<std::size_t>(reflect_index(col, n_cols))));
        }
    }
}

double extended_read(const Grid<double>& image, std::ptrdiff_t row, std::ptrdiff_t col) {
    const auto n_rows = static_cast<std::ptrdiff_t>(image.rows());
    const auto n_cols = static_cast<std::ptrdiff_t>(image.cols());
    if (row <= -n_rows || row >= 2 * n_rows - 1 || col <= -n_cols || col >= 2 * n_cols - 1)
        throw std::out_of_range("read outside the reflected image");
    return image(static_cast<std::size_t>(reflect_index(row, n_rows)),
                 static_cast<std::size_t>(reflect_index(col, n_cols)));
}

std::vector<PixelCoord> window_offsets(std::size_t radius_px, Parity parity) {
    const auto r = static_cast<std::ptrdiff_t>(radius_px);
    std::vector<PixelCoord> out;
    out.reserve(window_side(radius_px) * window_side(radius_px));
    for (std::ptrdiff_t i = -r; i <= r; ++i) {
        for (std::ptrdiff_t j = -r; j <= r; ++j) {
            const bool even = std::abs(i + j) % 2 == 0;
            if (parity == Parity::all || (parity == Parity::even) == even) out.push_back({i, j});
        }
    }
    return out;
}

std::vector<PixelCoord> window_pixels(const Window& w) {
    auto pixels = window_offsets(w.radius_px, w.parity);
    for (auto& p : pixels) p = w.center + p;
    return pixels;
}

} // namespace owpnf
