#include "owpnf/metrics.hpp"

#include <stdexcept>
#include <vector>

namespace owpnf {

namespace {

void check_shapes(const IntensityImage& estimate, const IntensityImage& truth) {
    if (!estimate.same_shape(truth))
        throw std::invalid_argument("estimate is " + std::to_string(estimate.rows()) + "x" +
                                    std::to_string(estimate.cols()) + " but truth is " + std::to_string(truth.rows()) +
                                    "x" + std::to_string(truth.cols()));
}

} // namespace

MetricResult nmise(const IntensityImage& estimate, const IntensityImage& truth, bool with_map) {
    check_shapes(estimate, truth);
    const auto est = estimate.values();
    const auto ref = truth.values();
    MetricResult result;
    std::vector<double> map(with_map ? ref.size() : 0, 0.0);
    double sum = 0.0;
    for (std::size_t i = 0; i < ref.size(); ++i) {
        if (!(ref[i] > 0.0)) continue;
        const double diff = est[i] - ref[i];
        const double term = diff * diff / ref[i];
        sum += term;
        ++result.n_star;
        if (with_map) map[i] = term;
    }
    if (result.n_star == 0) throw std::invalid_argument("NMISE is undefined: truth has no positive pixel");
    result.nmise = sum / static_cast<double>(result.n_star);
    result.mse = mse(estimate, truth);
    if (with_map) result.per_pixel = Grid<double>(truth.rows(), truth.cols(), std::move(map));
    return result;
}

double mse(const IntensityImage& estimate, const IntensityImage& truth) {
    check_shapes(estimate, truth);
    const auto est = estimate.values();
    const auto ref = truth.values();
    double sum = 0.0;
    for (std::size_t i = 0; i < ref.size(); ++i) {
        const double diff = est[i] - ref[i];
        sum += diff * diff;
    }
    return sum / static_cast<double>(ref.size());
}

} // namespace owpnf
