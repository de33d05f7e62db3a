#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace owpnf {

// Similarity values rho(x) and per-pixel variances f(x) over one search window,
// both indexed in window raster order.
class SimilarityProfile {
public:
    SimilarityProfile(std::vector<double> rho, std::vector<double> variance);
    static SimilarityProfile homoscedastic(std::vector<double> rho, double variance);

    std::span<const double> rho() const noexcept { return rho_; }
    std::span<const double> variance() const noexcept { return variance_; }
    std::size_t size() const noexcept { return rho_.size(); }

private:
    std::vector<double> rho_;
    std::vector<double> variance_;
};

// Nonnegative weights summing to one. bandwidth is +inf for a flat window (all rho = 0).
struct WeightVector {
    std::vector<double> weights;
    double bandwidth = 0.0;
};

// Bias/variance bound g(w) = (sum w rho)^2 + sum w^2 f.
double eval_g(const SimilarityProfile& profile, std::span<const double> w);

// M(a) = sum rho (a - rho)^+ / f, strictly increasing in a once it is positive.
double bandwidth_mass(const SimilarityProfile& profile, double a);

// Root of M(a) = 1 by the sort-and-scan rule; +inf when every rho is zero.
double solve_bandwidth(const SimilarityProfile& profile);

// Minimizer of g over the probability simplex: w ~ (a - rho)^+ / f.
WeightVector optimal_weights(const SimilarityProfile& profile);

// Allocation-free variant of optimal_weights for per-pixel loops. Keeps its sort
// buffer between calls, so one instance per worker thread.
class WeightSolver {
public:
    // Writes normalized weights into `weights` (same length as rho) and returns the bandwidth.
    double solve(std::span<const double> rho, std::span<const double> variance, std::span<double> weights);

    // Constant variance over the window. The bandwidth then solves
    // sum rho (a - rho)^+ = variance, and the weights reduce to (a - rho)^+ normalized.
    double solve(std::span<const double> rho, double variance, std::span<double> weights);

private:
    template <typename Variance>
    double solve_impl(std::span<const double> rho, Variance variance, std::span<double> weights);

    std::vector<std::size_t> order_;
};

} // namespace owpnf
