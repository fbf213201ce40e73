#include "rbody/io.hpp"

#include <chrono>
#include <cmath>
#include <ctime>
#include <fstream>
#include <sstream>

#include <zlib.h>

namespace rbody::io {

namespace {

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spit(const fs::path& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path.string());
  out.write(bytes.data(), std::streamsize(bytes.size()));
  if (!out) throw InputError("cannot write " + path.string());
}

// Reads the next header token of a PGM, skipping whitespace and comments.
std::string pgm_token(const std::string& s, std::size_t& pos) {
  for (;;) {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos < s.size() && s[pos] == '#') {
      while (pos < s.size() && s[pos] != '\n') ++pos;
      continue;
    }
    break;
  }
  std::size_t start = pos;
  while (pos < s.size() && !std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  if (start == pos) throw InputError("malformed PGM header");
  return s.substr(start, pos - start);
}

int pgm_int(const std::string& s, std::size_t& pos) {
  std::string t = pgm_token(s, pos);
  try {
    std::size_t used = 0;
    int v = std::stoi(t, &used);
    if (used != t.size()) throw InputError("malformed PGM header");
    return v;
  } catch (const std::logic_error&) {
    throw InputError("malformed PGM header");
  }
}

double number(const Json& j, const char* what) {
  if (!j.is_number()) throw InputError(std::string("expected a number for ") + what);
  double v = j.get<double>();
  if (!std::isfinite(v)) throw InputError(std::string("non-finite ") + what);
  return v;
}

Point2 point(const Json& j) {
  if (!j.is_array() || j.size() != 2) throw InputError("points must be [x, y] pairs");
  return {number(j[0], "coordinate"), number(j[1], "coordinate")};
}

double radius_field(const Json& j) {
  if (!j.is_object() || !j.contains("R")) throw InputError("missing \"R\"");
  double r = number(j["R"], "R");
  if (!(r > 0.0)) throw InputError("radius must be positive");
  return r;
}

Json stats_json(const std::map<std::string, double>& stats) {
  Json out = Json::object();
  for (const auto& [k, v] : stats) out[k] = std::isfinite(v) ? Json(v) : Json(nullptr);
  return out;
}

void chunk(std::string& out, const char* type, const std::string& body) {
  auto be32 = [&](std::uint32_t v) {
    for (int s = 24; s >= 0; s -= 8) out.push_back(char((v >> s) & 0xFF));
  };
  be32(std::uint32_t(body.size()));
  std::string typed = std::string(type, 4) + body;
  out += typed;
  be32(std::uint32_t(crc32(0L, reinterpret_cast<const Bytef*>(typed.data()), uInt(typed.size()))));
}

}  // namespace

fs::path header_path(const fs::path& pgm) {
  fs::path p = pgm;
  return p.replace_extension(".json");
}

BinaryMask read_mask(const fs::path& pgm) {
  std::string s = slurp(pgm);
  if (s.empty()) throw InputError("malformed PGM: empty file");
  std::size_t pos = 0;
  if (pgm_token(s, pos) != "P5") throw InputError("malformed PGM: expected P5");
  int w = pgm_int(s, pos);
  int h = pgm_int(s, pos);
  int maxval = pgm_int(s, pos);
  if (w <= 0 || h <= 0 || maxval <= 0 || maxval > 255) throw InputError("malformed PGM header");
  ++pos;  // single whitespace before the raster
  if (s.size() < pos + std::size_t(w) * std::size_t(h)) throw InputError("malformed PGM: truncated raster");

  Point2 origin{};
  double spacing = 1.0;
  fs::path hp = header_path(pgm);
  if (fs::exists(hp)) {
    Json j = read_json(hp);
    if (!j.is_object()) throw InputError("inconsistent lattice headers");
    if (j.contains("origin")) origin = point(j["origin"]);
    if (j.contains("spacing")) spacing = number(j["spacing"], "spacing");
    if (!(spacing > 0.0)) throw InputError("inconsistent lattice headers");
    if ((j.contains("width") && j["width"] != w) || (j.contains("height") && j["height"] != h)) {
      throw InputError("inconsistent lattice headers");
    }
  }
  BinaryMask m(w, h, origin, spacing);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      if (s[pos + std::size_t(y) * w + x] != 0) m.set(x, y);
    }
  }
  return m;
}

void write_mask(const fs::path& pgm, const BinaryMask& m) {
  std::string out = "P5\n" + std::to_string(m.width()) + " " + std::to_string(m.height()) + "\n255\n";
  out.reserve(out.size() + m.bits().size());
  for (std::uint8_t b : m.bits()) out.push_back(b ? char(255) : char(0));
  spit(pgm, out);
  Json hdr = {{"origin", {m.origin().x, m.origin().y}},
              {"spacing", m.spacing()},
              {"width", m.width()},
              {"height", m.height()}};
  spit(header_path(pgm), hdr.dump(2) + "\n");
}

Json read_json(const fs::path& path) {
  std::string s = slurp(path);
  try {
    return Json::parse(s);
  } catch (const Json::parse_error& e) {
    throw InputError("malformed JSON in " + path.string());
  }
}

PointSetFile parse_point_set(const Json& j) {
  PointSetFile out;
  out.radius = radius_field(j);
  if (!j.contains("points") || !j["points"].is_array()) throw InputError("missing \"points\"");
  for (const Json& p : j["points"]) out.points.push_back(point(p));
  if (out.points.empty()) throw InputError("empty point set");
  return out;
}

PointSetFile read_point_set(const fs::path& path) { return parse_point_set(read_json(path)); }

ConeSpec parse_cone(const Json& j, const Tolerances& tol) {
  double r = radius_field(j);
  if (!j.contains("generators") || !j["generators"].is_object()) throw InputError("missing \"generators\"");
  const Json& g = j["generators"];
  if (g.contains("angles")) {
    if (!g["angles"].is_array()) throw InputError("\"angles\" must be an array");
    std::vector<double> angles;
    for (const Json& a : g["angles"]) angles.push_back(number(a, "angle"));
    return ConeSpec::from_angles(angles, r, tol);
  }
  if (g.contains("arc")) {
    Point2 a = point(g["arc"]);
    return ConeSpec::from_arc(a.x, a.y, r, tol);
  }
  throw InputError("generators need \"angles\" or \"arc\"");
}

ConeSpec read_cone(const fs::path& path, const Tolerances& tol) { return parse_cone(read_json(path), tol); }

Json to_json(Point2 p) { return Json::array({p.x, p.y}); }

Json to_json(const ArcSet& a) {
  Json out = Json::object();
  out["full"] = a.is_full();
  Json arcs = Json::array();
  for (const Arc& arc : a.arcs()) arcs.push_back({{"mid", arc.mid}, {"halfwidth", arc.halfwidth}});
  out["arcs"] = arcs;
  out["measure"] = a.measure();
  return out;
}

Json to_json(const CheckReport& r) {
  Json out = Json::object();
  out["check"] = r.check;
  out["pass"] = r.pass;
  out["stats"] = stats_json(r.stats);
  Json w = Json::array();
  for (const Witness& x : r.witnesses) w.push_back({{"label", x.label}, {"at", to_json(x.at)}});
  out["witnesses"] = w;
  out["flags"] = r.flags;
  return out;
}

Json to_json(const ReachReport& r) {
  Json out = Json::object();
  out["verdict"] = to_string(r.verdict);
  out["method"] = to_string(r.method);
  out["stats"] = stats_json(r.stats);
  out["flags"] = r.flags;
  if (r.pair) {
    out["witness_pair"] = {{"b1", to_json(r.pair->b1)}, {"b2", to_json(r.pair->b2)}, {"components", r.pair->components}};
  }
  if (r.point) out["witness_point"] = to_json(*r.point);
  return out;
}

Json make_report(const std::string& command) {
  Json out = Json::object();
  out["schema"] = kReportSchema;
  out["command"] = command;
  return out;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

void write_report(const fs::path& out, const Json& report) {
  spit(out, dump(report));
  std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
  Json meta = {{"report", out.filename().string()}, {"generated_at", buf}};
  fs::path mp = out;
  mp += ".meta.json";
  spit(mp, dump(meta));
}

RgbImage::RgbImage(int w, int h, Rgb fill) : width(w), height(h), data(std::size_t(w) * std::size_t(h) * 3) {
  for (std::size_t i = 0; i < data.size(); i += 3) std::copy(fill.begin(), fill.end(), data.begin() + long(i));
}

void RgbImage::put(int x, int y, Rgb color) {
  if (x < 0 || y < 0 || x >= width || y >= height) return;
  std::size_t i = (std::size_t(y) * width + x) * 3;
  std::copy(color.begin(), color.end(), data.begin() + long(i));
}

void RgbImage::paint(const BinaryMask& m, Rgb color) {
  if (m.width() != width || m.height() != height) throw InputError("inconsistent lattice headers");
  for (int y = 0; y < height; ++y) {
    for (int x = 0; x < width; ++x) {
      if (m.at(x, y)) put(x, y, color);
    }
  }
}

void write_png(const fs::path& path, const RgbImage& img) {
  std::string raw;
  const std::size_t row = std::size_t(img.width) * 3;
  raw.reserve((row + 1) * std::size_t(img.height));
  for (int y = img.height - 1; y >= 0; --y) {
    raw.push_back(0);
    raw.append(reinterpret_cast<const char*>(img.data.data()) + std::size_t(y) * row, row);
  }
  uLongf zlen = compressBound(uLong(raw.size()));
  std::string z(zlen, '\0');
  if (compress2(reinterpret_cast<Bytef*>(z.data()), &zlen, reinterpret_cast<const Bytef*>(raw.data()),
                uLong(raw.size()), 9) != Z_OK) {
    throw InputError("PNG compression failed");
  }
  z.resize(zlen);

  std::string ihdr;
  auto be32 = [&](std::uint32_t v) {
    for (int s = 24; s >= 0; s -= 8) ihdr.push_back(char((v >> s) & 0xFF));
  };
  be32(std::uint32_t(img.width));
  be32(std::uint32_t(img.height));
  ihdr += std::string{char(8), char(2), char(0), char(0), char(0)};  // 8-bit RGB

  std::string out("\x89PNG\r\n\x1a\n", 8);
  chunk(out, "IHDR", ihdr);
  chunk(out, "IDAT", z);
  chunk(out, "IEND", "");
  spit(path, out);
}

void write_svg(const fs::path& path, const RgbImage& img) {
  std::ostringstream s;
  s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << img.width << "\" height=\"" << img.height
    << "\" viewBox=\"0 0 " << img.width << ' ' << img.height << "\" shape-rendering=\"crispEdges\">\n";
  auto at = [&](int x, int y) {
    std::size_t i = (std::size_t(y) * img.width + x) * 3;
    return Rgb{img.data[i], img.data[i + 1], img.data[i + 2]};
  };
  // One rect per horizontal run of equal color; white is the background.
  s << "<rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n";
  for (int y = 0; y < img.height; ++y) {
    int x = 0;
    while (x < img.width) {
      Rgb c = at(x, y);
      int run = 1;
      while (x + run < img.width && at(x + run, y) == c) ++run;
      if (c != Rgb{255, 255, 255}) {
        char hex[8];
        std::snprintf(hex, sizeof hex, "#%02x%02x%02x", c[0], c[1], c[2]);
        s << "<rect x=\"" << x << "\" y=\"" << (img.height - 1 - y) << "\" width=\"" << run
          << "\" height=\"1\" fill=\"" << hex << "\"/>\n";
      }
      x += run;
    }
  }
  s << "</svg>\n";
  spit(path, s.str());
}

}  // namespace rbody::io
