#include "owpnf/filters.hpp"

#include "owpnf/parallel.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace owpnf {

namespace {

// Search-window offsets with their linear form for one extended image.
struct WindowStencil {
    std::vector<PixelCoord> offsets;
    std::vector<std::ptrdiff_t> linear;
    std::size_t center_index = 0;

    WindowStencil(std::size_t radius, Parity parity, std::ptrdiff_t stride) : offsets(window_offsets(radius, parity)) {
        for (std::size_t i = 0; i < offsets.size(); ++i) {
            linear.push_back(offsets[i].row * stride + offsets[i].col);
            if (offsets[i] == PixelCoord{0, 0}) center_index = i;
        }
    }
};

PixelCoord coord(std::size_t row, std::size_t col) {
    return {static_cast<std::ptrdiff_t>(row), static_cast<std::ptrdiff_t>(col)};
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

} // namespace

void FilterParams::validate() const {
    if (std::isnan(gamma_threshold)) throw std::invalid_argument("gamma threshold must be a number");
    if (!(smooth_bandwidth > 0.0)) throw std::invalid_argument("smoothing bandwidth H must be positive");
    if (kernel == KernelKind::gaussian && !(gaussian_h > 0.0))
        throw std::invalid_argument("gaussian patch kernel bandwidth must be positive");
    if (!(oracle_offset >= 0.0)) throw std::invalid_argument("oracle offset must be nonnegative");
    if (split == SplitMode::on && patch_radius_px == 0)
        throw std::invalid_argument("split mode needs a patch radius of at least 1");
}

double weighted_estimate(std::span<const double> samples, std::span<const double> weights, std::size_t anchor) {
    if (samples.size() != weights.size())
        throw std::invalid_argument("weight vector length " + std::to_string(weights.size()) +
                                    " does not match window size " + std::to_string(samples.size()));
    if (anchor >= samples.size()) throw std::invalid_argument("anchor index outside the window");
    const double base = samples[anchor];
    double correction = 0.0;
    for (std::size_t i = 0; i < samples.size(); ++i) correction += weights[i] * (samples[i] - base);
    return base + correction;
}

double weighted_estimate(const ExtendedImage& counts, const Window& window, const WeightVector& w) {
    const auto pixels = window_pixels(window);
    std::vector<double> samples;
    samples.reserve(pixels.size());
    std::size_t anchor = 0;
    for (std::size_t i = 0; i < pixels.size(); ++i) {
        samples.push_back(counts.at(pixels[i]));
        if (pixels[i] == window.center) anchor = i;
    }
    return weighted_estimate(samples, w.weights, anchor);
}

DenoiseReport oracle_filter(const IntensityImage& truth, const CountImage& counts, const FilterParams& params) {
    params.validate();
    if (!truth.same_shape(counts)) throw std::invalid_argument("truth and count images differ in size");
    const auto start = std::chrono::steady_clock::now();
    const std::size_t rows = counts.rows();
    const std::size_t cols = counts.cols();
    const ExtendedImage f(truth, params.search_radius_px);
    const ExtendedImage y(counts, params.search_radius_px);
    const WindowStencil window(params.search_radius_px, Parity::all, f.stride());
    const std::size_t m = window.offsets.size();

    std::vector<double> out(rows * cols);
    std::vector<double> bandwidth(rows * cols);
    parallel_for_blocks(rows, params.threads, [&](std::size_t row_begin, std::size_t row_end) {
        WeightSolver solver;
        std::vector<double> rho(m), variance(m), weights(m), samples(m);
        for (std::size_t row = row_begin; row < row_end; ++row) {
            for (std::size_t col = 0; col < cols; ++col) {
                const double* fp = f.pointer(coord(row, col));
                const double* yp = y.pointer(coord(row, col));
                const double f0 = *fp;
                for (std::size_t i = 0; i < m; ++i) {
                    const double fx = fp[window.linear[i]];
                    rho[i] = std::abs(fx - f0) + params.oracle_offset;
                    variance[i] = std::max(fx, mean_level_floor);
                    samples[i] = yp[window.linear[i]];
                }
                const std::size_t idx = row * cols + col;
                bandwidth[idx] = solver.solve(rho, variance, weights);
                out[idx] = std::max(weighted_estimate(samples, weights, window.center_index), 0.0);
            }
        }
    });

    DenoiseReport report;
    report.output = IntensityImage(rows, cols, std::move(out));
    report.bandwidth = Grid<double>(rows, cols, std::move(bandwidth));
    report.params = params;
    report.seconds = seconds_since(start);
    return report;
}

IntensityImage owpnf_step1(const CountImage& counts, const FilterParams& params, Grid<double>* bandwidth_out) {
    params.validate();
    const std::size_t rows = counts.rows();
    const std::size_t cols = counts.cols();
    const bool split = params.split == SplitMode::on;
    const ExtendedImage y(counts, params.search_radius_px + params.patch_radius_px);
    // Split mode: weights from odd-parity pixels, averages over even-parity ones.
    const WindowStencil window(params.search_radius_px, split ? Parity::even : Parity::all, y.stride());
    const PatchStencil patch(params.patch_kernel(), y.stride(), split ? Parity::odd : Parity::all);
    const Parity mean_parity = split ? Parity::odd : Parity::all;
    const std::size_t m = window.offsets.size();

    std::vector<double> out(rows * cols);
    std::vector<double> bandwidth(bandwidth_out ? rows * cols : 0);
    parallel_for_blocks(rows, params.threads, [&](std::size_t row_begin, std::size_t row_end) {
        WeightSolver solver;
        std::vector<double> rho(m), weights(m), samples(m);
        for (std::size_t row = row_begin; row < row_end; ++row) {
            for (std::size_t col = 0; col < cols; ++col) {
                const PixelCoord x0 = coord(row, col);
                const double mean = local_mean(y, x0, params.search_radius_px, mean_parity);
                const double* yp = y.pointer(x0);
                for (std::size_t i = 0; i < m; ++i) {
                    rho[i] = estimated_similarity(y, x0, x0 + window.offsets[i], patch, mean);
                    samples[i] = yp[window.linear[i]];
                }
                const double a = solver.solve(rho, mean, weights);
                const std::size_t idx = row * cols + col;
                if (bandwidth_out) bandwidth[idx] = a;
                out[idx] = std::max(weighted_estimate(samples, weights, window.center_index), 0.0);
            }
        }
    });
    if (bandwidth_out) *bandwidth_out = Grid<double>(rows, cols, std::move(bandwidth));
    return IntensityImage(rows, cols, std::move(out));
}

IntensityImage owpnf_step2(const IntensityImage& step1, const FilterParams& params) {
    params.validate();
    const std::size_t rows = step1.rows();
    const std::size_t cols = step1.cols();
    const ExtendedImage fp(step1, std::max(params.search_radius_px, params.smooth_radius_px));
    const WindowStencil search(params.search_radius_px, Parity::all, fp.stride());
    const WindowStencil smooth(params.smooth_radius_px, Parity::all, fp.stride());

    std::vector<double> kernel;
    double kernel_total = 0.0;
    const double denom = 2.0 * params.smooth_bandwidth * params.smooth_bandwidth;
    for (auto o : smooth.offsets) {
        kernel.push_back(std::exp(-static_cast<double>(o.row * o.row + o.col * o.col) / denom));
        kernel_total += kernel.back();
    }
    for (auto& k : kernel) k /= kernel_total;

    std::vector<double> out(rows * cols);
    parallel_for_blocks(rows, params.threads, [&](std::size_t row_begin, std::size_t row_end) {
        std::vector<double> samples(smooth.offsets.size());
        for (std::size_t row = row_begin; row < row_end; ++row) {
            for (std::size_t col = 0; col < cols; ++col) {
                const double* p = fp.pointer(coord(row, col));
                double gamma = 0.0;
                for (auto d : search.linear) gamma += p[d];
                gamma /= static_cast<double>(search.linear.size());
                double value = *p;
                if (gamma <= params.gamma_threshold) {
                    for (std::size_t i = 0; i < samples.size(); ++i) samples[i] = p[smooth.linear[i]];
                    value = weighted_estimate(samples, kernel, smooth.center_index);
                }
                out[row * cols + col] = std::max(value, 0.0);
            }
        }
    });
    return IntensityImage(rows, cols, std::move(out));
}

DenoiseReport owpnf(const CountImage& counts, const FilterParams& params) {
    const auto start = std::chrono::steady_clock::now();
    DenoiseReport report;
    Grid<double> bandwidth;
    report.step1 = owpnf_step1(counts, params, &bandwidth);
    report.output = owpnf_step2(*report.step1, params);
    report.bandwidth = std::move(bandwidth);
    report.params = params;
    report.seconds = seconds_since(start);
    return report;
}

} // namespace owpnf
