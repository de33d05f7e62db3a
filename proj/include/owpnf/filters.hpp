#pragma once

#include "owpnf/grid.hpp"
#include "owpnf/similarity.hpp"
#include "owpnf/weights.hpp"

#include <cstddef>
#include <optional>
#include <span>

namespace owpnf {

enum class SplitMode { off, on };

struct FilterParams {
    std::size_t search_radius_px = 7;  // M = (2r+1)^2
    std::size_t patch_radius_px = 4;   // m = (2r+1)^2
    KernelKind kernel = KernelKind::k_zero;
    double gaussian_h = 1.0;           // patch kernel bandwidth for KernelKind::gaussian
    double gamma_threshold = 5.0;
    std::size_t smooth_radius_px = 2;  // d
    double smooth_bandwidth = 1.0;     // H
    SplitMode split = SplitMode::off;
    double oracle_offset = 0.0;        // delta added to every oracle similarity
    unsigned threads = 1;              // does not affect results

    PatchKernel patch_kernel() const { return {kernel, patch_radius_px, gaussian_h}; }
    void validate() const;
};

struct DenoiseReport {
    IntensityImage output;
    std::optional<IntensityImage> step1;           // OWPNF first-step output f'
    std::optional<Grid<double>> bandwidth;         // per-pixel a (may be +inf)
    double seconds = 0.0;
    FilterParams params;
};

// f~ = sum w Y, accumulated as Y(anchor) + sum w (Y - Y(anchor)) so that a constant
// input is reproduced exactly.
double weighted_estimate(std::span<const double> samples, std::span<const double> weights, std::size_t anchor);
double weighted_estimate(const ExtendedImage& counts, const Window& window, const WeightVector& w);

// Oracle filter: weights from the true intensities, averaging the observed counts.
DenoiseReport oracle_filter(const IntensityImage& truth, const CountImage& counts, const FilterParams& params);

IntensityImage owpnf_step1(const CountImage& counts, const FilterParams& params,
                           Grid<double>* bandwidth_out = nullptr);
IntensityImage owpnf_step2(const IntensityImage& step1, const FilterParams& params);

// Full two-step filter: owpnf_step2(owpnf_step1(counts)).
DenoiseReport owpnf(const CountImage& counts, const FilterParams& params);

} // namespace owpnf
