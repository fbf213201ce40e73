#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "rbody/fixtures.hpp"
#include "rbody/io.hpp"
#include "rbody/morph.hpp"

using namespace rbody;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  fs::path dir = fs::temp_directory_path() / "rbody_test_io";
  fs::create_directories(dir);
  return dir / name;
}

void write_text(const fs::path& p, const std::string& s) {
  std::ofstream f(p, std::ios::binary);
  f << s;
}

}  // namespace

TEST_CASE("masks round-trip through PGM and the lattice header") {
  BinaryMask m(40, 30, {2.5, -1.0}, 0.5);
  m.set(3, 4);
  m.set(39, 29);
  m.set(10, 0);
  fs::path p = scratch("roundtrip.pgm");
  io::write_mask(p, m);
  CHECK(fs::exists(io::header_path(p)));
  BinaryMask back = io::read_mask(p);
  CHECK(back == m);
  CHECK(back.lattice() == m.lattice());
}

TEST_CASE("PGM without a header uses the unit lattice") {
  fs::path p = scratch("bare.pgm");
  std::string body = "P5\n# comment\n3 2\n255\n";
  body += std::string("\x00\xff\x00\x00\x00\x01", 6);
  write_text(p, body);
  fs::remove(io::header_path(p));
  BinaryMask m = io::read_mask(p);
  CHECK(m.width() == 3);
  CHECK(m.height() == 2);
  CHECK(m.spacing() == 1.0);
  CHECK(m.count() == 2);
}

TEST_CASE("malformed mask inputs are rejected") {
  fs::path e = scratch("empty.pgm");
  write_text(e, "");
  CHECK_THROWS_WITH_AS(io::read_mask(e), "malformed PGM: empty file", InputError);

  fs::path bad = scratch("bad.pgm");
  write_text(bad, "P2\n3 3\n255\n");
  CHECK_THROWS_AS(io::read_mask(bad), InputError);

  fs::path shortp = scratch("short.pgm");
  write_text(shortp, "P5\n4 4\n255\nab");
  CHECK_THROWS_AS(io::read_mask(shortp), InputError);

  BinaryMask m(8, 8);
  fs::path p = scratch("mismatch.pgm");
  io::write_mask(p, m);
  write_text(io::header_path(p), R"({"origin":[0,0],"spacing":1.0,"width":9,"height":8})");
  CHECK_THROWS_WITH_AS(io::read_mask(p), "inconsistent lattice headers", InputError);
}

TEST_CASE("point sets and cones parse from JSON") {
  io::PointSetFile ps = io::parse_point_set(io::Json::parse(R"({"R": 2.0, "points": [[0,0],[1,2]]})"));
  CHECK(ps.radius == 2.0);
  REQUIRE(ps.points.size() == 2);
  CHECK(ps.points[1].y == 2.0);
  CHECK_THROWS_AS(io::parse_point_set(io::Json::parse(R"({"R": 2.0, "points": []})")), InputError);
  CHECK_THROWS_AS(io::parse_point_set(io::Json::parse(R"({"points": [[0,0]]})")), InputError);
  CHECK_THROWS_AS(io::parse_point_set(io::Json::parse(R"({"R": -1, "points": [[0,0]]})")), InputError);

  ConeSpec k = io::parse_cone(io::Json::parse(R"({"R": 1.0, "generators": {"angles": [0, 1.5707963267948966]}})"));
  CHECK(k.generators().size() == 2);
  ConeSpec a = io::parse_cone(io::Json::parse(R"({"R": 1.0, "generators": {"arc": [0.5, 0.25]}})"));
  CHECK(a.generators().measure() == doctest::Approx(0.5));
  CHECK_THROWS_AS(io::parse_cone(io::Json::parse(R"({"R": 1.0, "generators": {}})")), InputError);

  fs::path bad = scratch("bad.json");
  write_text(bad, "{ not json");
  CHECK_THROWS_AS(io::read_json(bad), InputError);
}

TEST_CASE("reports are deterministic") {
  BinaryMask m = fixtures::disk(48, 48, {24, 24}, 12);
  auto make = [&] {
    io::Json rep = io::make_report("identities");
    rep["result"] = io::to_json(identity_report(m, RadiusPx(6.0001)));
    return io::dump(rep);
  };
  CHECK(make() == make());
  io::Json j = io::Json::parse(make());
  CHECK(j["schema"] == "rbody-report/1");
  CHECK(j["result"]["pass"].get<bool>());
}

TEST_CASE("renderings are written") {
  io::RgbImage img(10, 6);
  BinaryMask m(10, 6);
  m.set(2, 2);
  img.paint(m, {255, 0, 0});
  fs::path png = scratch("out.png");
  fs::path svg = scratch("out.svg");
  io::write_png(png, img);
  io::write_svg(svg, img);
  std::ifstream f(png, std::ios::binary);
  char sig[8];
  f.read(sig, 8);
  CHECK(std::string(sig + 1, 3) == "PNG");
  CHECK(fs::file_size(svg) > 0);
}
