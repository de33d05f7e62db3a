#pragma once

#include "owpnf/grid.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace owpnf {

enum class KernelKind { gaussian, k_zero, rectangular };

// Patch weighting kernel. gaussian_h is the Gaussian bandwidth in pixels and is
// only read for KernelKind::gaussian.
struct PatchKernel {
    KernelKind kind = KernelKind::k_zero;
    std::size_t radius_px = 0;
    double gaussian_h = 1.0;
};

// Unnormalized kernel values over the (2r+1)^2 patch in raster order.
//   gaussian:    exp(-d^2 / (2 h^2)), d the Euclidean pixel distance to the centre
//   k_zero:      sum_{k=max(1,j)}^{r} 1/(2k+1)^2 on the sup-norm shell j (1 when r = 0)
//   rectangular: 1/(2r+1)^2
std::vector<double> kernel_values(const PatchKernel& kernel);

// kernel_values normalized to sum to one.
std::vector<double> kernel_weights(const PatchKernel& kernel);

// Precomputed patch offsets and normalized weights, with linear offsets for an
// ExtendedImage of a given stride. Restricting to a parity keeps only offsets
// whose i + j has that parity and renormalizes over them.
class PatchStencil {
public:
    PatchStencil(const PatchKernel& kernel, std::ptrdiff_t stride, Parity parity = Parity::all);

    std::span<const PixelCoord> offsets() const noexcept { return offsets_; }
    std::span<const std::ptrdiff_t> linear_offsets() const noexcept { return linear_; }
    std::span<const double> weights() const noexcept { return weights_; }
    std::ptrdiff_t stride() const noexcept { return stride_; }

private:
    std::ptrdiff_t stride_;
    std::vector<PixelCoord> offsets_;
    std::vector<std::ptrdiff_t> linear_;
    std::vector<double> weights_;
};

struct SimilarityField {
    PixelCoord center;
    std::vector<double> values;  // search-window raster order
    double mean_level = 0.0;
};

// rho(x) = |f(x) - f(x0)| + offset over the window pixels.
SimilarityField oracle_similarity(const ExtendedImage& truth, const Window& window, double offset = 0.0);
SimilarityField oracle_similarity(const IntensityImage& truth, const Window& window, double offset = 0.0);

// sum_y kappa(y) |Y(y) - Y(T y)|^2 over the patch around x0, T the translation x0 -> x.
double patch_distance_sq(const ExtendedImage& counts, PixelCoord x0, PixelCoord x, const PatchStencil& stencil);

// (sqrt(distance_sq) - sqrt(2 mean_level))^+
double debiased_distance(double distance_sq, double mean_level);

double estimated_similarity(const ExtendedImage& counts, PixelCoord x0, PixelCoord x, const PatchStencil& stencil,
                            double mean_level);
double estimated_similarity(const CountImage& counts, PixelCoord x0, PixelCoord x, const PatchKernel& kernel,
                            double mean_level);

inline constexpr double mean_level_floor = 1e-6;

// Mean count over the search window of radius radius_px around x0, floored at mean_level_floor.
double local_mean(const ExtendedImage& counts, PixelCoord x0, std::size_t radius_px, Parity parity = Parity::all);
double local_mean(const CountImage& counts, PixelCoord x0, std::size_t radius_px);

} // namespace owpnf
