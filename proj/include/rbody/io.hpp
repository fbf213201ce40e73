#pragma once

// File formats: PGM masks with a JSON lattice header, point-set and cone
// JSON inputs, JSON reports, and raster renderings (PNG, SVG).

#include <array>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "rbody/exact2d.hpp"
#include "rbody/mask.hpp"
#include "rbody/rcone.hpp"
#include "rbody/reach.hpp"
#include "rbody/report.hpp"

namespace rbody::io {

namespace fs = std::filesystem;
using Json = nlohmann::json;

inline constexpr const char* kReportSchema = "rbody-report/1";

/// Sidecar header path for a mask file: same stem, ".json" extension.
fs::path header_path(const fs::path& pgm);

/// Reads binary PGM (P5, maxval ≤ 255; nonzero = foreground) plus the optional
/// sidecar {"origin": [x, y], "spacing": h}.
BinaryMask read_mask(const fs::path& pgm);
void write_mask(const fs::path& pgm, const BinaryMask& m);

struct PointSetFile {
  double radius = 0.0;
  std::vector<Point2> points;
};

/// {"R": r, "points": [[x, y], ...]}
PointSetFile read_point_set(const fs::path& path);
PointSetFile parse_point_set(const Json& j);

/// {"R": r, "generators": {"angles": [...]}} or {"R": r, "generators": {"arc": [mid, hw]}}
ConeSpec read_cone(const fs::path& path, const Tolerances& tol = {});
ConeSpec parse_cone(const Json& j, const Tolerances& tol = {});

Json read_json(const fs::path& path);

Json to_json(Point2 p);
Json to_json(const ArcSet& a);
Json to_json(const CheckReport& r);
Json to_json(const ReachReport& r);

/// Report envelope {"schema", "command", ...}; keys are emitted sorted.
Json make_report(const std::string& command);
/// Writes the report and, next to it, "<out>.meta.json" with a timestamp.
void write_report(const fs::path& out, const Json& report);
std::string dump(const Json& j);

using Rgb = std::array<std::uint8_t, 3>;

struct RgbImage {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> data;  // row-major RGB, row 0 is lattice y = 0

  RgbImage(int w, int h, Rgb fill = {255, 255, 255});
  void paint(const BinaryMask& m, Rgb color);
  void put(int x, int y, Rgb color);
};

/// Image rows are flipped so that lattice y grows upward.
void write_png(const fs::path& path, const RgbImage& img);
void write_svg(const fs::path& path, const RgbImage& img);

}  // namespace rbody::io
