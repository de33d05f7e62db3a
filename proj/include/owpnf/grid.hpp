#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace owpnf {

// 0-based pixel coordinate. Offsets from a window center use the same type.
struct PixelCoord {
    std::ptrdiff_t row = 0;
    std::ptrdiff_t col = 0;

    friend constexpr PixelCoord operator+(PixelCoord a, PixelCoord b) { return {a.row + b.row, a.col + b.col}; }
    friend constexpr PixelCoord operator-(PixelCoord a, PixelCoord b) { return {a.row - b.row, a.col - b.col}; }
    friend constexpr auto operator<=>(const PixelCoord&, const PixelCoord&) = default;
};

// Row-major immutable pixel grid. Derived image types validate their values.
template <typename T>
class Grid {
public:
    using value_type = T;

    Grid() = default;
    Grid(std::size_t rows, std::size_t cols, std::vector<T> values)
        : rows_(rows), cols_(cols), values_(std::move(values)) {
        if (rows == 0 || cols == 0) throw std::invalid_argument("grid dimensions must be positive");
        if (values_.size() != rows * cols)
            throw std::invalid_argument("grid value count " + std::to_string(values_.size()) +
                                        " does not match " + std::to_string(rows) + "x" + std::to_string(cols));
    }
    Grid(std::size_t rows, std::size_t cols, T fill) : Grid(rows, cols, std::vector<T>(rows * cols, fill)) {}

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    std::size_t size() const noexcept { return values_.size(); }
    const T& operator()(std::size_t row, std::size_t col) const { return values_[row * cols_ + col]; }
    std::span<const T> values() const noexcept { return values_; }

    bool same_shape(const auto& other) const noexcept { return rows_ == other.rows() && cols_ == other.cols(); }

    friend bool operator==(const Grid&, const Grid&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> values_;
};

// Noise-free intensities f(x): finite and nonnegative.
class IntensityImage : public Grid<double> {
public:
    IntensityImage() = default;
    IntensityImage(std::size_t rows, std::size_t cols, std::vector<double> values);
    IntensityImage(std::size_t rows, std::size_t cols, double fill);
};

// Observed photon counts Y(x).
class CountImage : public Grid<std::uint32_t> {
public:
    CountImage() = default;
    CountImage(std::size_t rows, std::size_t cols, std::vector<std::uint32_t> values)
        : Grid(rows, cols, std::move(values)) {}
    CountImage(std::size_t rows, std::size_t cols, std::uint32_t fill) : Grid(rows, cols, fill) {}
};

IntensityImage to_intensity(const CountImage& counts);

// Mirror an index into [0, n) about the edge pixels without duplicating them:
// -1 -> 1, n -> n-2. Valid for -(n-1) <= i <= 2(n-1).
constexpr std::ptrdiff_t reflect_index(std::ptrdiff_t i, std::ptrdiff_t n) noexcept {
    if (i < 0) return -i;
    if (i >= n) return 2 * (n - 1) - i;
    return i;
}

// Padded copy of an image with symmetric boundary extension on all four sides.
// Reads are valid for row in [-radius, rows + radius) and likewise for columns.
class ExtendedImage {
public:
    ExtendedImage(const Grid<double>& image, std::size_t radius);
    ExtendedImage(const Grid<std::uint32_t>& image, std::size_t radius);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    std::size_t radius() const noexcept { return radius_; }
    std::ptrdiff_t stride() const noexcept { return static_cast<std::ptrdiff_t>(cols_ + 2 * radius_); }

    double at(std::ptrdiff_t row, std::ptrdiff_t col) const { return buffer_[index(row, col)]; }
    double at(PixelCoord p) const { return at(p.row, p.col); }

    // Pointer to the sample at (row, col); neighbours are reached through stride().
    const double* pointer(PixelCoord p) const { return buffer_.data() + index(p.row, p.col); }

private:
    std::size_t index(std::ptrdiff_t row, std::ptrdiff_t col) const {
        const auto r = static_cast<std::ptrdiff_t>(radius_);
        return static_cast<std::size_t>((row + r) * stride() + (col + r));
    }

    template <typename T>
    void fill(const Grid<T>& image);

    std::size_t rows_;
    std::size_t cols_;
    std::size_t radius_;
    std::vector<double> buffer_;
};

// Extended-image read at an arbitrary coordinate within reach of one reflection.
double extended_read(const Grid<double>& image, std::ptrdiff_t row, std::ptrdiff_t col);

enum class Parity { all, even, odd };

struct Window {
    PixelCoord center;
    std::size_t radius_px = 0;
    Parity parity = Parity::all;
};

// Offsets (i, j) with max(|i|, |j|) <= radius in raster order, filtered by the parity of i + j.
std::vector<PixelCoord> window_offsets(std::size_t radius_px, Parity parity = Parity::all);

// Window pixels in canonical raster order (top-left to bottom-right).
std::vector<PixelCoord> window_pixels(const Window& w);

// T_{x0,x}(y) = x + (y - x0).
constexpr PixelCoord translate(PixelCoord y, PixelCoord x0, PixelCoord x) noexcept { return x + (y - x0); }

constexpr std::size_t window_side(std::size_t radius_px) noexcept { return 2 * radius_px + 1; }

} // namespace owpnf
