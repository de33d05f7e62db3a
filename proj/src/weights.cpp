#include "owpnf/weights.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace owpnf {

namespace {

constexpr double infinity = std::numeric_limits<double>::infinity();

void check_rho(std::span<const double> rho) {
    if (rho.empty()) throw std::invalid_argument("similarity profile must not be empty");
    for (std::size_t i = 0; i < rho.size(); ++i) {
        if (!std::isfinite(rho[i]) || rho[i] < 0.0)
            throw std::invalid_argument("similarity value at index " + std::to_string(i) +
                                        " must be finite and nonnegative");
    }
}

void check_variance(double v, std::size_t i) {
    if (!(v > 0.0) || !std::isfinite(v))
        throw std::invalid_argument("variance at index " + std::to_string(i) + " must be positive and finite");
}

} // namespace

SimilarityProfile::SimilarityProfile(std::vector<double> rho, std::vector<double> variance)
    : rho_(std::move(rho)), variance_(std::move(variance)) {
    if (rho_.size() != variance_.size()) throw std::invalid_argument("rho and variance lengths differ");
    check_rho(rho_);
    for (std::size_t i = 0; i < variance_.size(); ++i) check_variance(variance_[i], i);
}

SimilarityProfile SimilarityProfile::homoscedastic(std::vector<double> rho, double variance) {
    std::vector<double> var(rho.size(), variance);
    return SimilarityProfile(std::move(rho), std::move(var));
}

double eval_g(const SimilarityProfile& profile, std::span<const double> w) {
    if (w.size() != profile.size()) throw std::invalid_argument("weight vector length does not match profile");
    double bias = 0.0;
    double variance = 0.0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        bias += w[i] * profile.rho()[i];
        variance += w[i] * w[i] * profile.variance()[i];
    }
    return bias * bias + variance;
}

double bandwidth_mass(const SimilarityProfile& profile, double a) {
    double mass = 0.0;
    for (std::size_t i = 0; i < profile.size(); ++i) {
        const double rho = profile.rho()[i];
        mass += rho * std::max(a - rho, 0.0) / profile.variance()[i];
    }
    return mass;
}

template <typename Variance>
double WeightSolver::solve_impl(std::span<const double> rho, Variance variance, std::span<double> weights) {
    check_rho(rho);
    if (weights.size() != rho.size()) throw std::invalid_argument("weight buffer length does not match profile");
    const std::size_t n = rho.size();

    order_.resize(n);
    std::iota(order_.begin(), order_.end(), std::size_t{0});
    // Ascending rho, ties by raster index: same ordering as a stable sort.
    std::sort(order_.begin(), order_.end(), [&](std::size_t l, std::size_t r) {
        return rho[l] < rho[r] || (rho[l] == rho[r] && l < r);
    });

    // k* = max{k : a_k >= rho_k}, a_k = (1 + sum rho^2/f) / (sum rho/f) over the k smallest,
    // with a_k = inf while the partial sum of rho is zero.
    double sum_rho = 0.0;
    double sum_rho2 = 0.0;
    double a = infinity;
    for (std::size_t k = 0; k < n; ++k) {
        const std::size_t i = order_[k];
        const double f = variance(i);
        sum_rho += rho[i] / f;
        sum_rho2 += rho[i] * rho[i] / f;
        const double a_k = sum_rho > 0.0 ? (1.0 + sum_rho2) / sum_rho : infinity;
        if (a_k >= rho[i]) a = a_k;
    }

    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        weights[i] = (a == infinity ? 1.0 : std::max(a - rho[i], 0.0)) / variance(i);
        total += weights[i];
    }
    for (auto& w : weights) w /= total;
    return a;
}

double WeightSolver::solve(std::span<const double> rho, std::span<const double> variance,
                           std::span<double> weights) {
    if (variance.size() != rho.size()) throw std::invalid_argument("rho and variance lengths differ");
    for (std::size_t i = 0; i < variance.size(); ++i) check_variance(variance[i], i);
    return solve_impl(rho, [variance](std::size_t i) { return variance[i]; }, weights);
}

double WeightSolver::solve(std::span<const double> rho, double variance, std::span<double> weights) {
    check_variance(variance, 0);
    return solve_impl(rho, [variance](std::size_t) { return variance; }, weights);
}

double solve_bandwidth(const SimilarityProfile& profile) {
    WeightSolver solver;
    std::vector<double> scratch(profile.size());
    return solver.solve(profile.rho(), profile.variance(), scratch);
}

WeightVector optimal_weights(const SimilarityProfile& profile) {
    WeightSolver solver;
    WeightVector out;
    out.weights.resize(profile.size());
    out.bandwidth = solver.solve(profile.rho(), profile.variance(), out.weights);
    return out;
}

} // namespace owpnf
