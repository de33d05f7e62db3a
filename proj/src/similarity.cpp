#include "owpnf/similarity.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace owpnf {

namespace {

double k_zero_shell(std::size_t shell, std::size_t radius) {
    double value = 0.0;
    for (std::size_t k = std::max<std::size_t>(1, shell); k <= radius; ++k) {
        const double side = static_cast<double>(2 * k + 1);
        value += 1.0 / (side * side);
    }
    return value;
}

std::vector<double> normalized(std::vector<double> values) {
    double total = 0.0;
    for (double v : values) total += v;
    for (auto& v : values) v /= total;
    return values;
}

} // namespace

std::vector<double> kernel_values(const PatchKernel& kernel) {
    const auto offsets = window_offsets(kernel.radius_px);
    std::vector<double> values;
    values.reserve(offsets.size());
    switch (kernel.kind) {
    case KernelKind::gaussian: {
        if (!(kernel.gaussian_h > 0.0)) throw std::invalid_argument("gaussian kernel bandwidth must be positive");
        const double denom = 2.0 * kernel.gaussian_h * kernel.gaussian_h;
        for (auto o : offsets) values.push_back(std::exp(-static_cast<double>(o.row * o.row + o.col * o.col) / denom));
        break;
    }
    case KernelKind::k_zero:
        if (kernel.radius_px == 0) return {1.0};
        for (auto o : offsets) {
            const auto shell = static_cast<std::size_t>(std::max(std::abs(o.row), std::abs(o.col)));
            values.push_back(k_zero_shell(shell, kernel.radius_px));
        }
        break;
    case KernelKind::rectangular:
        values.assign(offsets.size(), 1.0 / static_cast<double>(offsets.size()));
        break;
    }
    return values;
}

std::vector<double> kernel_weights(const PatchKernel& kernel) { return normalized(kernel_values(kernel)); }

PatchStencil::PatchStencil(const PatchKernel& kernel, std::ptrdiff_t stride, Parity parity) : stride_(stride) {
    const auto all = window_offsets(kernel.radius_px);
    const auto values = kernel_values(kernel);
    for (std::size_t i = 0; i < all.size(); ++i) {
        const bool even = std::abs(all[i].row + all[i].col) % 2 == 0;
        if (parity != Parity::all && (parity == Parity::even) != even) continue;
        offsets_.push_back(all[i]);
        linear_.push_back(all[i].row * stride + all[i].col);
        weights_.push_back(values[i]);
    }
    if (offsets_.empty()) throw std::invalid_argument("patch stencil has no pixels for the requested parity");
    weights_ = normalized(std::move(weights_));
}

SimilarityField oracle_similarity(const ExtendedImage& truth, const Window& window, double offset) {
    if (offset < 0.0) throw std::invalid_argument("similarity offset must be nonnegative");
    SimilarityField field;
    field.center = window.center;
    const double center = truth.at(window.center);
    field.mean_level = std::max(center, mean_level_floor);
    for (auto p : window_pixels(window)) field.values.push_back(std::abs(truth.at(p) - center) + offset);
    return field;
}

SimilarityField oracle_similarity(const IntensityImage& truth, const Window& window, double offset) {
    return oracle_similarity(ExtendedImage(truth, window.radius_px), window, offset);
}

double patch_distance_sq(const ExtendedImage& counts, PixelCoord x0, PixelCoord x, const PatchStencil& stencil) {
    if (stencil.stride() != counts.stride()) throw std::invalid_argument("patch stencil built for another image");
    const double* p0 = counts.pointer(x0);
    const double* p1 = counts.pointer(x);
    const auto linear = stencil.linear_offsets();
    const auto weights = stencil.weights();
    double sum = 0.0;
    for (std::size_t j = 0; j < linear.size(); ++j) {
        const double diff = p0[linear[j]] - p1[linear[j]];
        sum += weights[j] * diff * diff;
    }
    return sum;
}

double debiased_distance(double distance_sq, double mean_level) {
    return std::max(std::sqrt(distance_sq) - std::sqrt(2.0 * mean_level), 0.0);
}

double estimated_similarity(const ExtendedImage& counts, PixelCoord x0, PixelCoord x, const PatchStencil& stencil,
                            double mean_level) {
    return debiased_distance(patch_distance_sq(counts, x0, x, stencil), mean_level);
}

double estimated_similarity(const CountImage& counts, PixelCoord x0, PixelCoord x, const PatchKernel& kernel,
                            double mean_level) {
    const auto shift = std::max(std::abs(x.row - x0.row), std::abs(x.col - x0.col));
    const ExtendedImage extended(counts, kernel.radius_px + static_cast<std::size_t>(shift));
    return estimated_similarity(extended, x0, x, PatchStencil(kernel, extended.stride()), mean_level);
}

double local_mean(const ExtendedImage& counts, PixelCoord x0, std::size_t radius_px, Parity parity) {
    double sum = 0.0;
    std::size_t count = 0;
    for (auto o : window_offsets(radius_px, parity)) {
        sum += counts.at(x0 + o);
        ++count;
    }
    return std::max(sum / static_cast<double>(count), mean_level_floor);
}

double local_mean(const CountImage& counts, PixelCoord x0, std::size_t radius_px) {
    return local_mean(ExtendedImage(counts, radius_px), x0, radius_px);
}

} // namespace owpnf
