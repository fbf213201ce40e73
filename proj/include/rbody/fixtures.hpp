#pragma once

// Deterministic mask generators used by the test suites and `rbody make-fixture`.

#include <cstdint>
#include <string>
#include <vector>

#include "rbody/mask.hpp"

namespace rbody::fixtures {

BinaryMask disk(int w, int h, Point2 center, double radius);
BinaryMask filled_square(int w, int h, Point2 corner, int side);
/// Rectangle of length `length` between the cap centers, capped by half-disks of radius `cap`.
BinaryMask stadium(int w, int h, Point2 center, double length, double cap);
/// Two disks joined by a horizontal bar.
BinaryMask dumbbell(int w, int h, Point2 left, Point2 right, double disk_radius, double bar_width);
BinaryMask pixels(int w, int h, const std::vector<std::pair<int, int>>& pts);
/// Pixels nearest to the vertices of an equilateral triangle.
BinaryMask triangle_vertices(int w, int h, Point2 center, double circumradius);
/// Boundary of an axis-aligned square inscribed in a circle of the given radius, one pixel thick.
BinaryMask square_outline(int w, int h, Point2 center, double circumradius);
/// Smooth random blob: thresholded sum of Gaussian bumps inside the central window region.
BinaryMask blob(int w, int h, std::uint64_t seed, int margin);
std::vector<BinaryMask> blob_corpus(int count, int size, std::uint64_t seed, int margin);

/// The bundled corpus: 20 blobs on a 256² window, 80-pixel empty margin.
inline constexpr int kCorpusCount = 20;
inline constexpr int kCorpusSize = 256;
inline constexpr int kCorpusMargin = 80;
inline constexpr std::uint64_t kCorpusSeed = 0xC0FFEE;
std::vector<BinaryMask> standard_corpus();

}  // namespace rbody::fixtures
