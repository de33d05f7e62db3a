#include "doctest.h"

#include "owpnf/metrics.hpp"
#include "owpnf/noise.hpp"

#include <algorithm>
#include <random>

using namespace owpnf;

TEST_CASE("nmise checkpoints") {
    const auto truth = generate_scene(default_scene(SceneKind::spots, 32, 32));
    CHECK(nmise(truth, truth).nmise == 0.0);
    CHECK(nmise(IntensityImage(1, 1, 6.0), IntensityImage(1, 1, 4.0)).nmise == 1.0);
}

TEST_CASE("nmise skips zero-truth pixels, mse does not") {
    const IntensityImage truth(1, 4, std::vector<double>{0, 0, 2, 2});
    const IntensityImage est(1, 4, std::vector<double>{1, 1, 2, 4});
    const auto m = nmise(est, truth, true);
    CHECK(m.n_star == 2);
    CHECK(m.nmise == doctest::Approx(1.0));  // (0 + 4/2) / 2
    CHECK(m.mse == doctest::Approx(6.0 / 4));
    REQUIRE(m.per_pixel.has_value());
    CHECK((*m.per_pixel)(0, 0) == 0.0);
    CHECK((*m.per_pixel)(0, 3) == 2.0);
    CHECK_THROWS(nmise(est, IntensityImage(1, 4, 0.0)));
    CHECK_THROWS(nmise(IntensityImage(2, 2, 1.0), truth));
}

TEST_CASE("mse checkpoints") {
    const IntensityImage a(4, 4, 3.0);
    CHECK(mse(a, a) == 0.0);
    CHECK(mse(IntensityImage(4, 4, 3.25), a) == doctest::Approx(0.0625));
    std::vector<double> half(16, 0.0);
    std::fill(half.begin(), half.begin() + 8, 1.0);
    CHECK(mse(IntensityImage(4, 4, half), IntensityImage(4, 4, 0.0)) == 0.5);
}

TEST_CASE("raw counts have NMISE close to 1") {
    const auto truth = generate_scene(parse_scene("gradient:0.05:5", 256, 256));
    const auto y = to_intensity(sample_poisson(truth, {17}));
    CHECK(std::abs(nmise(y, truth).nmise - 1.0) < 0.05);
}

TEST_CASE("nmise is invariant under a joint pixel permutation") {
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> u(0.0, 3.0);
    std::vector<double> t(50), e(50);
    for (std::size_t i = 0; i < 50; ++i) t[i] = u(rng), e[i] = u(rng);
    t[3] = 0.0;
    std::vector<std::size_t> perm(50);
    for (std::size_t i = 0; i < 50; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<double> tp(50), ep(50);
    for (std::size_t i = 0; i < 50; ++i) tp[i] = t[perm[i]], ep[i] = e[perm[i]];
    const auto a = nmise(IntensityImage(5, 10, e), IntensityImage(5, 10, t));
    const auto b = nmise(IntensityImage(10, 5, ep), IntensityImage(10, 5, tp));
    CHECK(a.nmise == doctest::Approx(b.nmise).epsilon(1e-13));
    CHECK(a.n_star == 49);
    CHECK(a.nmise >= 0.0);
}
