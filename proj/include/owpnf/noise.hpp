#pragma once

#include "owpnf/grid.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

namespace owpnf {

struct NoiseSeed {
    std::uint64_t seed = 0;
};

// Counter-based generator: the stream for pixel (row, col) is fully determined by
// (seed, row, col). Draw i is the SplitMix64 finalizer applied to
// key + (i + 1) * 0x9E3779B97F4A7C15, where key mixes seed, row and col.
class PixelRng {
public:
    PixelRng(std::uint64_t seed, std::uint64_t row, std::uint64_t col) noexcept;

    std::uint64_t next() noexcept;
    double uniform() noexcept;  // [0, 1), 53 bits

private:
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

std::uint64_t mix64(std::uint64_t z) noexcept;

// Poisson(lambda) draw: sequential-search inversion below 30, PTRS rejection above.
std::uint32_t poisson_draw(double lambda, PixelRng& rng);

CountImage sample_poisson(const IntensityImage& intensity, NoiseSeed seed, unsigned threads = 1);

enum class SceneKind { spots, ridges, constant, gradient };

// Synthetic test scenes. Field meaning by kind:
//   spots:    low/high amplitude range, background level
//   ridges:   low/high ridge peak range, background level, incline = peak of the inclined ridge
//   constant: low
//   gradient: low at the left column, high at the right column
struct SceneSpec {
    SceneKind kind = SceneKind::spots;
    std::size_t rows = 256;
    std::size_t cols = 256;
    double low = 0.08;
    double high = 4.99;
    double background = 0.03;
    double incline = 0.3;
};

SceneSpec default_scene(SceneKind kind, std::size_t rows, std::size_t cols);

// Parses "spots[:low:high:background]", "ridges[:low:high:background:incline]",
// "constant:level" and "gradient:low:high".
SceneSpec parse_scene(std::string_view text, std::size_t rows, std::size_t cols);
std::string to_string(const SceneSpec& spec);

IntensityImage generate_scene(const SceneSpec& spec);

} // namespace owpnf
