#include "owpnf/noise.hpp"

#include "owpnf/parallel.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace owpnf {

namespace {

constexpr std::uint64_t golden = 0x9E3779B97F4A7C15ULL;
constexpr double inversion_limit = 30.0;

std::uint32_t poisson_inversion(double lambda, PixelRng& rng) {
    const double u = rng.uniform();
    double p = std::exp(-lambda);
    double cdf = p;
    std::uint32_t k = 0;
    // The cap only matters when rounding leaves the cdf short of u.
    while (u > cdf && k < 1000) {
        ++k;
        p *= lambda / k;
        cdf += p;
    }
    return k;
}

// PTRS transformed rejection (Hormann 1993).
std::uint32_t poisson_ptrs(double lambda, PixelRng& rng) {
    const double slam = std::sqrt(lambda);
    const double loglam = std::log(lambda);
    const double b = 0.931 + 2.53 * slam;
    const double a = -0.059 + 0.02483 * b;
    const double inv_alpha = 1.1239 + 1.1328 / (b - 3.4);
    const double vr = 0.9277 - 3.6224 / (b - 2.0);
    for (;;) {
        const double u = rng.uniform() - 0.5;
        const double v = rng.uniform();
        const double us = 0.5 - std::abs(u);
        const double k = std::floor((2.0 * a / us + b) * u + lambda + 0.43);
        if (us >= 0.07 && v <= vr) return static_cast<std::uint32_t>(k);
        if (k < 0.0 || (us < 0.013 && v > us)) continue;
        if (std::log(v) + std::log(inv_alpha) - std::log(a / (us * us) + b) <=
            -lambda + k * loglam - std::lgamma(k + 1.0))
            return static_cast<std::uint32_t>(k);
    }
}

} // namespace

std::uint64_t mix64(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

PixelRng::PixelRng(std::uint64_t seed, std::uint64_t row, std::uint64_t col) noexcept
    : key_(mix64(mix64(mix64(seed) ^ (row * golden + 1)) ^ (col * 0xD1B54A32D192ED03ULL + 2))) {}

std::uint64_t PixelRng::next() noexcept { return mix64(key_ + (++counter_) * golden); }

double PixelRng::uniform() noexcept { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

std::uint32_t poisson_draw(double lambda, PixelRng& rng) {
    if (!(lambda >= 0.0) || !std::isfinite(lambda)) throw std::invalid_argument("Poisson intensity must be finite and nonnegative");
    if (lambda == 0.0) return 0;
    return lambda < inversion_limit ? poisson_inversion(lambda, rng) : poisson_ptrs(lambda, rng);
}

CountImage sample_poisson(const IntensityImage& intensity, NoiseSeed seed, unsigned threads) {
    const std::size_t rows = intensity.rows();
    const std::size_t cols = intensity.cols();
    std::vector<std::uint32_t> counts(rows * cols);
    parallel_for_blocks(rows, threads, [&](std::size_t begin, std::size_t end) {
        for (std::size_t row = begin; row < end; ++row) {
            for (std::size_t col = 0; col < cols; ++col) {
                PixelRng rng(seed.seed, row, col);
                counts[row * cols + col] = poisson_draw(intensity(row, col), rng);
            }
        }
    });
    return CountImage(rows, cols, std::move(counts));
}

} // namespace owpnf
