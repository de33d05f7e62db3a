#include "doctest.h"

#include "owpnf/weights.hpp"
#include "support/brute_force_weights.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>

using namespace owpnf;
using owpnf::testing::bound_value;
using owpnf::testing::brute_force_weights;

namespace {

SimilarityProfile random_profile(std::mt19937_64& rng, std::size_t max_len, bool allow_ties = true) {
    std::uniform_int_distribution<std::size_t> len(1, max_len);
    std::uniform_real_distribution<double> rho(0.0, 2.0);
    std::uniform_real_distribution<double> var(0.1, 5.0);
    std::bernoulli_distribution zero(0.15);
    const std::size_t n = len(rng);
    std::vector<double> r(n), f(n);
    for (std::size_t i = 0; i < n; ++i) {
        r[i] = zero(rng) ? 0.0 : rho(rng);
        if (allow_ties && i > 0 && zero(rng)) r[i] = r[i - 1];
        f[i] = var(rng);
    }
    r[0] = 0.0;  // centre pixel
    return SimilarityProfile(r, f);
}

std::vector<double> random_simplex_point(std::mt19937_64& rng, std::size_t n) {
    std::exponential_distribution<double> e(1.0);
    std::vector<double> w(n);
    for (auto& x : w) x = e(rng);
    const double s = std::accumulate(w.begin(), w.end(), 0.0);
    for (auto& x : w) x /= s;
    return w;
}

} // namespace

TEST_CASE("eval_g closed forms") {
    CHECK(eval_g(SimilarityProfile({0, 0}, {1, 1}), std::vector<double>{0.5, 0.5}) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(eval_g(SimilarityProfile({1, 1}, {1, 1}), std::vector<double>{1, 0}) == 2.0);
    // (1/3)^2 + (1/4 + 1/9 + 1/36) = 1/9 + 7/18 = 1/2
    const double g = eval_g(SimilarityProfile({0, 0.5, 1}, {1, 1, 1}), std::vector<double>{0.5, 1.0 / 3, 1.0 / 6});
    CHECK(g == doctest::Approx(0.5).epsilon(1e-14));
    CHECK_THROWS(eval_g(SimilarityProfile({0, 1}, {1, 1}), std::vector<double>{1.0}));
}

TEST_CASE("solve_bandwidth checkpoints") {
    CHECK(solve_bandwidth(SimilarityProfile({0, 0.5, 1}, {1, 1, 1})) == doctest::Approx(1.5).epsilon(1e-14));
    CHECK(solve_bandwidth(SimilarityProfile({0, 1}, {1, 2})) == doctest::Approx(3.0).epsilon(1e-14));
    CHECK(std::isinf(solve_bandwidth(SimilarityProfile({0, 0, 0}, {1, 7, 0.5}))));
    // M(1.5) = 0.5 * 1.0 + 1.0 * 0.5 = 1
    const SimilarityProfile p({0, 0.5, 1}, {1, 1, 1});
    CHECK(bandwidth_mass(p, 1.5) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("solve_bandwidth rejects nonpositive variance") {
    CHECK_THROWS_AS(SimilarityProfile({0, 1}, {1, 0}), std::invalid_argument);
    CHECK_THROWS_AS(SimilarityProfile({0, 1}, {1, -2}), std::invalid_argument);
    WeightSolver solver;
    std::vector<double> w(2);
    CHECK_THROWS_AS(solver.solve(std::vector<double>{0, 1}, std::vector<double>{1, 0}, w), std::invalid_argument);
    CHECK_THROWS_AS(solver.solve(std::vector<double>{0, 1}, 0.0, w), std::invalid_argument);
}

TEST_CASE("optimal_weights checkpoints") {
    const auto w = optimal_weights(SimilarityProfile({0, 0.5, 1}, {1, 1, 1}));
    CHECK(w.bandwidth == doctest::Approx(1.5));
    CHECK(w.weights[0] == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(w.weights[1] == doctest::Approx(1.0 / 3).epsilon(1e-12));
    CHECK(w.weights[2] == doctest::Approx(1.0 / 6).epsilon(1e-12));

    const auto w2 = optimal_weights(SimilarityProfile({0, 1}, {1, 2}));
    CHECK(w2.weights[0] == doctest::Approx(0.75).epsilon(1e-12));
    CHECK(w2.weights[1] == doctest::Approx(0.25).epsilon(1e-12));

    const auto flat = optimal_weights(SimilarityProfile::homoscedastic(std::vector<double>(7, 0.0), 3.0));
    CHECK(std::isinf(flat.bandwidth));
    for (double x : flat.weights) CHECK(x == doctest::Approx(1.0 / 7).epsilon(1e-15));

    // Flat window with varying variance: inverse-variance weights.
    const auto inv = optimal_weights(SimilarityProfile({0, 0}, {1, 3}));
    CHECK(inv.weights[0] == doctest::Approx(0.75));
    CHECK(inv.weights[1] == doctest::Approx(0.25));
}

TEST_CASE("brute-force oracle agrees on the worked examples") {
    const SimilarityProfile p({0, 0.5, 1}, {1, 1, 1});
    const auto bf = brute_force_weights(p);
    CHECK(bf.weights[0] == doctest::Approx(0.5).epsilon(1e-6));
    CHECK(bf.weights[1] == doctest::Approx(1.0 / 3).epsilon(1e-6));
    CHECK(bf.weights[2] == doctest::Approx(1.0 / 6).epsilon(1e-6));

    CHECK(brute_force_weights(SimilarityProfile({0.7}, {2})).weights == std::vector<double>{1.0});

    const SimilarityProfile far({0, 1e6}, {1, 1});
    CHECK(brute_force_weights(far).weights[0] == doctest::Approx(1.0).epsilon(1e-5));
    CHECK(optimal_weights(far).weights[0] == doctest::Approx(1.0).epsilon(1e-5));
}

TEST_CASE("property: optimal weights are feasible and beat brute force and random simplex points") {
    std::mt19937_64 rng(20240611);
    for (int trial = 0; trial < 150; ++trial) {
        const auto profile = random_profile(rng, 12);
        const auto w = optimal_weights(profile);
        double sum = 0.0;
        for (double x : w.weights) {
            CHECK(x >= 0.0);
            sum += x;
        }
        CHECK(std::abs(sum - 1.0) <= 1e-12);

        const double g_opt = bound_value(profile, w.weights);
        const double g_bf = bound_value(profile, brute_force_weights(profile).weights);
        CHECK(g_opt <= g_bf + 1e-8);
        CHECK(g_bf <= g_opt + 1e-8);
        for (int k = 0; k < 1000 / 150 + 1; ++k)
            CHECK(g_opt <= bound_value(profile, random_simplex_point(rng, profile.size())) + 1e-8);

        const double total_rho = std::accumulate(profile.rho().begin(), profile.rho().end(), 0.0);
        if (total_rho > 0.0) CHECK(std::abs(bandwidth_mass(profile, w.bandwidth) - 1.0) <= 1e-10);
        else CHECK(std::isinf(w.bandwidth));
    }
}

TEST_CASE("property: 1000 random simplex points never beat the optimum") {
    std::mt19937_64 rng(7);
    const auto profile = random_profile(rng, 25);
    const double g_opt = eval_g(profile, optimal_weights(profile).weights);
    for (int k = 0; k < 1000; ++k) CHECK(g_opt <= eval_g(profile, random_simplex_point(rng, profile.size())) + 1e-8);
}

TEST_CASE("property: monotone in rho for constant variance") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(0.0, 3.0);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<double> rho(1 + trial % 30);
        for (auto& r : rho) r = u(rng);
        const auto w = optimal_weights(SimilarityProfile::homoscedastic(rho, 0.1 + trial * 0.01)).weights;
        for (std::size_t i = 0; i < rho.size(); ++i)
            for (std::size_t j = 0; j < rho.size(); ++j)
                if (rho[i] < rho[j]) CHECK(w[i] >= w[j]);
    }
}

TEST_CASE("property: permutation equivariance") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        const auto profile = random_profile(rng, 20, false);
        std::vector<std::size_t> perm(profile.size());
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<double> r, f;
        for (auto i : perm) {
            r.push_back(profile.rho()[i]);
            f.push_back(profile.variance()[i]);
        }
        const auto base = optimal_weights(profile).weights;
        const auto permuted = optimal_weights(SimilarityProfile(r, f)).weights;
        for (std::size_t k = 0; k < perm.size(); ++k) CHECK(permuted[k] == doctest::Approx(base[perm[k]]).epsilon(1e-12));
    }
}

TEST_CASE("property: constant variance matches the homoscedastic a-scan") {
    // With f = c everywhere, a_k = (c + sum rho^2) / sum rho over the k smallest similarities,
    // scanning upward and stopping at the first a_k < rho_k.
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> u(0.0, 4.0);
    for (int trial = 0; trial < 300; ++trial) {
        const double c = 0.05 + 0.1 * (trial % 40);
        std::vector<double> rho(2 + trial % 25);
        for (auto& r : rho) r = u(rng);
        rho[0] = 0.0;

        std::vector<double> sorted = rho;
        std::sort(sorted.begin(), sorted.end());
        double a = 1.0, s1 = 0.0, s2 = 0.0;
        for (double r : sorted) {
            s1 += r;
            s2 += r * r;
            if (s1 <= 0.0) continue;
            const double ak = (c + s2) / s1;
            if (ak >= r) a = ak;
            else break;
        }
        std::vector<double> expected(rho.size());
        double total = 0.0;
        for (std::size_t i = 0; i < rho.size(); ++i) total += expected[i] = std::max(a - rho[i], 0.0);
        for (auto& e : expected) e /= total;

        WeightSolver solver;
        std::vector<double> w(rho.size());
        const double got_a = solver.solve(rho, c, w);
        CHECK(got_a == doctest::Approx(a).epsilon(1e-12));
        for (std::size_t i = 0; i < rho.size(); ++i) CHECK(w[i] == doctest::Approx(expected[i]).epsilon(1e-12));

        // Same weights as the heteroscedastic form with every variance equal to c.
        const auto hetero = optimal_weights(SimilarityProfile::homoscedastic(rho, c)).weights;
        for (std::size_t i = 0; i < rho.size(); ++i) CHECK(hetero[i] == doctest::Approx(w[i]).epsilon(1e-12));
    }
}

TEST_CASE("property: scaling all variances by c equals solving sum rho (a-rho)^+ = c") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 100; ++trial) {
        const auto profile = random_profile(rng, 15);
        const double c = 0.2 + trial * 0.05;
        std::vector<double> scaled(profile.variance().begin(), profile.variance().end());
        for (auto& f : scaled) f *= c;
        const SimilarityProfile scaled_profile(std::vector<double>(profile.rho().begin(), profile.rho().end()), scaled);
        const double a = solve_bandwidth(scaled_profile);
        if (std::isinf(a)) continue;
        // sum rho (a - rho)^+ / f = c  <=>  M_scaled(a) = 1
        CHECK(bandwidth_mass(profile, a) == doctest::Approx(c).epsilon(1e-10));
    }
}

TEST_CASE("ties are resolved deterministically") {
    const std::vector<double> rho{0, 1, 1, 1, 0.5, 0.5};
    WeightSolver solver;
    std::vector<double> a(rho.size()), b(rho.size());
    solver.solve(rho, 1.0, a);
    solver.solve(rho, 1.0, b);
    CHECK(a == b);
    CHECK(a[1] == a[2]);
    CHECK(a[4] == a[5]);
}
