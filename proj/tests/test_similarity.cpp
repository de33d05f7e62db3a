#include "doctest.h"

#include "owpnf/similarity.hpp"

#include <cmath>
#include <numeric>
#include <random>

using namespace owpnf;

namespace {

CountImage random_counts(std::size_t rows, std::size_t cols, std::uint64_t seed, std::uint32_t max = 9) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint32_t> u(0, max);
    std::vector<std::uint32_t> v(rows * cols);
    for (auto& x : v) x = u(rng);
    return CountImage(rows, cols, v);
}

} // namespace

TEST_CASE("K0 kernel checkpoints") {
    const auto r1 = kernel_weights({KernelKind::k_zero, 1});
    REQUIRE(r1.size() == 9);
    for (double w : r1) CHECK(w == doctest::Approx(1.0 / 9).epsilon(1e-15));

    const auto raw1 = kernel_values({KernelKind::k_zero, 1});
    for (double w : raw1) CHECK(w == doctest::Approx(1.0 / 9).epsilon(1e-15));

    const auto r2 = kernel_weights({KernelKind::k_zero, 2});
    REQUIRE(r2.size() == 25);
    const double inner = (1.0 / 9 + 1.0 / 25) / 2;  // 17/225
    const double outer = (1.0 / 25) / 2;            // 1/50
    for (std::size_t i = 0; i < 25; ++i) {
        const auto row = static_cast<int>(i / 5) - 2;
        const auto col = static_cast<int>(i % 5) - 2;
        const bool ring2 = std::max(std::abs(row), std::abs(col)) == 2;
        CHECK(r2[i] == doctest::Approx(ring2 ? outer : inner).epsilon(1e-14));
    }
    CHECK(kernel_weights({KernelKind::k_zero, 0}) == std::vector<double>{1.0});
}

TEST_CASE("K0 mass identity: unnormalized sum over a radius-k patch is k") {
    for (std::size_t k = 1; k <= 10; ++k) {
        const auto v = kernel_values({KernelKind::k_zero, k});
        CHECK(std::abs(std::accumulate(v.begin(), v.end(), 0.0) - static_cast<double>(k)) <= 1e-12);
    }
}

TEST_CASE("rectangular and gaussian kernels") {
    for (double w : kernel_weights({KernelKind::rectangular, 1})) CHECK(w == doctest::Approx(1.0 / 9));
    const auto g = kernel_weights({KernelKind::gaussian, 1, 1.0});
    const double e1 = std::exp(-0.5), e2 = std::exp(-1.0);
    const double total = 1 + 4 * e1 + 4 * e2;
    CHECK(g[4] == doctest::Approx(1 / total));
    CHECK(g[1] == doctest::Approx(e1 / total));
    CHECK(g[0] == doctest::Approx(e2 / total));
    for (std::size_t r = 0; r < 6; ++r) {
        for (auto kind : {KernelKind::gaussian, KernelKind::k_zero, KernelKind::rectangular}) {
            const auto w = kernel_weights({kind, r, 1.3});
            CHECK(std::abs(std::accumulate(w.begin(), w.end(), 0.0) - 1.0) <= 1e-12);
        }
    }
    CHECK_THROWS(kernel_values({KernelKind::gaussian, 2, 0.0}));
}

TEST_CASE("oracle similarity") {
    const IntensityImage flat(8, 8, 3.0);
    const Window w{{4, 4}, 2, Parity::all};
    for (double v : oracle_similarity(flat, w).values) CHECK(v == 0.0);
    for (double v : oracle_similarity(flat, w, 0.1).values) CHECK(v == doctest::Approx(0.1));

    std::vector<double> vals(16, 2.0);
    vals[1 * 4 + 2] = 5.0;
    const IntensityImage img(4, 4, vals);
    const auto field = oracle_similarity(img, {{1, 1}, 1, Parity::all});
    CHECK(field.values[5] == 3.0);  // offset (0, +1) -> pixel (1, 2)
    CHECK(field.values[4] == 0.0);
}

TEST_CASE("debiased distance arithmetic") {
    CHECK(debiased_distance(16.0, 2.0) == doctest::Approx(2.0));
    CHECK(debiased_distance(2.0, 2.0) == 0.0);
    CHECK(debiased_distance(0.0, 1e-6) == 0.0);
}

TEST_CASE("estimated similarity is zero for identical patches and at x = x0") {
    const auto counts = random_counts(20, 20, 1);
    const PatchKernel k0{KernelKind::k_zero, 2};
    for (std::ptrdiff_t r = 0; r < 20; r += 3)
        for (std::ptrdiff_t c = 0; c < 20; c += 4) CHECK(estimated_similarity(counts, {r, c}, {r, c}, k0, 1.0) == 0.0);

    // A horizontally periodic image has identical patches one period apart.
    std::vector<std::uint32_t> periodic(12 * 12);
    for (std::size_t i = 0; i < periodic.size(); ++i) periodic[i] = static_cast<std::uint32_t>((i % 12) % 3 * 4);
    const CountImage p(12, 12, periodic);
    CHECK(estimated_similarity(p, {6, 4}, {6, 7}, {KernelKind::rectangular, 1}, 1e-6) == 0.0);
}

TEST_CASE("estimated similarity: known squared-difference sum") {
    // Rectangular 1x1 patch (radius 0): distance is |Y(x0) - Y(x)|.
    const CountImage img(5, 5, std::vector<std::uint32_t>(25, 0));
    std::vector<std::uint32_t> v(25, 0);
    v[2 * 5 + 3] = 4;
    const CountImage c(5, 5, v);
    CHECK(estimated_similarity(c, {2, 2}, {2, 3}, {KernelKind::rectangular, 0}, 2.0) == doctest::Approx(2.0));
    CHECK(estimated_similarity(img, {2, 2}, {2, 3}, {KernelKind::rectangular, 0}, 2.0) == 0.0);
}

TEST_CASE("symmetry of the squared patch distance") {
    const auto counts = random_counts(24, 24, 2);
    const ExtendedImage ext(counts, 6);
    const PatchStencil stencil({KernelKind::rectangular, 2}, ext.stride());
    for (std::ptrdiff_t r = 0; r < 24; r += 5)
        for (std::ptrdiff_t c = 0; c < 24; c += 5) {
            const PixelCoord x0{r, c};
            const PixelCoord x{std::min<std::ptrdiff_t>(r + 3, 23), std::max<std::ptrdiff_t>(c - 2, 0)};
            CHECK(patch_distance_sq(ext, x0, x, stencil) == doctest::Approx(patch_distance_sq(ext, x, x0, stencil)));
        }
}

TEST_CASE("monotonicity: raising one difference never lowers rho-hat") {
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<std::uint32_t> v(15 * 15);
        std::uniform_int_distribution<std::uint32_t> u(0, 5);
        for (auto& x : v) x = u(rng);
        const PixelCoord x0{7, 7}, x{7, 9};
        const PatchKernel k{KernelKind::k_zero, 2};
        const double before = estimated_similarity(CountImage(15, 15, v), x0, x, k, 1.5);
        // (7, 11) = T(7, 9) is read only through the patch around x; raising it while it is
        // already >= Y(7, 9) increases that one difference.
        const std::size_t idx = 7 * 15 + 11;
        const std::uint32_t ref = v[7 * 15 + 9];
        if (v[idx] < ref) continue;
        v[idx] += 3;
        const double after = estimated_similarity(CountImage(15, 15, v), x0, x, k, 1.5);
        CHECK(after >= before);
    }
}

TEST_CASE("local mean") {
    CHECK(local_mean(CountImage(6, 6, std::vector<std::uint32_t>(36, 7)), {3, 3}, 2) == 7.0);
    CHECK(local_mean(CountImage(6, 6, std::vector<std::uint32_t>(36, 0)), {3, 3}, 2) == mean_level_floor);
    std::vector<std::uint32_t> v(9);
    std::iota(v.begin(), v.end(), 0u);
    CHECK(local_mean(CountImage(3, 3, v), {1, 1}, 1) == 4.0);
}

TEST_CASE("parity stencils renormalize over their pixels") {
    const PatchStencil odd({KernelKind::k_zero, 2}, 30, Parity::odd);
    CHECK(odd.offsets().size() == 12);
    CHECK(std::abs(std::accumulate(odd.weights().begin(), odd.weights().end(), 0.0) - 1.0) < 1e-12);
    CHECK_THROWS(PatchStencil({KernelKind::k_zero, 0}, 30, Parity::odd));
}
