#pragma once

#include "owpnf/grid.hpp"

#include <cstddef>
#include <optional>

namespace owpnf {

struct MetricResult {
    double nmise = 0.0;
    double mse = 0.0;
    std::size_t n_star = 0;                 // pixels with truth > 0
    std::optional<Grid<double>> per_pixel;  // (estimate - truth)^2 / truth, 0 where truth = 0
};

// Mean of (estimate - truth)^2 / truth over pixels with truth > 0. Sums run in raster order.
MetricResult nmise(const IntensityImage& estimate, const IntensityImage& truth, bool with_map = false);

// Mean of (estimate - truth)^2 over all pixels.
double mse(const IntensityImage& estimate, const IntensityImage& truth);

} // namespace owpnf
