#pragma once

#include "owpnf/grid.hpp"

#include <filesystem>
#include <iosfwd>

namespace owpnf {

// Text formats: a header line "FMAT <rows> <cols>" (intensities, 17 significant
// digits) or "CMAT <rows> <cols>" (integer counts), followed by row-major
// whitespace-separated values, one image row per line.
// Binary PGM (P5, maxval 255 or 65535) maps gray level g to intensity g * scale.
enum class ImageFormat { fmat, cmat, pgm };

ImageFormat detect_format(std::istream& in);

IntensityImage read_intensity(std::istream& in, double scale = 1.0);
CountImage read_counts(std::istream& in);

void write_fmat(std::ostream& out, const Grid<double>& image);
void write_cmat(std::ostream& out, const CountImage& image);
// Gray level round(value / scale); maxval 255 when it suffices, else 65535.
void write_pgm(std::ostream& out, const Grid<double>& image, double scale = 1.0);
void write_pgm(std::ostream& out, const CountImage& image);

// File variants. Writers pick PGM for a ".pgm" extension and the text format otherwise.
IntensityImage read_intensity_file(const std::filesystem::path& path, double scale = 1.0);
CountImage read_counts_file(const std::filesystem::path& path);
void write_intensity_file(const std::filesystem::path& path, const Grid<double>& image, double scale = 1.0);
void write_counts_file(const std::filesystem::path& path, const CountImage& image);

} // namespace owpnf
