#include <doctest.h>

#include <random>

#include "cases.hpp"
#include "oracles.hpp"
#include "rbody/fixtures.hpp"
#include "rbody/morph.hpp"

using namespace rbody;
namespace fx = rbody::fixtures;

namespace {

std::size_t out_of_band(const BinaryMask& diff, const BinaryMask& edges) {
  return band_check(diff, edges, Tolerances{}.band_px).out_of_band;
}

BinaryMask symdiff(const BinaryMask& a, const BinaryMask& b) { return a.minus(b) | b.minus(a); }

std::vector<BinaryMask> small_blobs() { return fx::blob_corpus(6, 128, 99, 36); }

}  // namespace

TEST_CASE("squared EDT examples") {
  BinaryMask one = fx::pixels(3, 3, {{0, 0}});
  CHECK(sq_edt(one).at(2, 1) == 5);

  BinaryMask all(4, 3);
  for (auto& b : all.bits()) b = 1;
  SqDistField full = sq_edt(all);
  for (auto v : full.values()) CHECK(v == 0);

  BinaryMask two = fx::pixels(5, 1, {{0, 0}, {4, 0}});
  CHECK(sq_edt(two).at(1, 0) == 1);
  CHECK(sq_edt(two).at(3, 0) == 1);

  CHECK_THROWS_WITH_AS(sq_edt(BinaryMask(4, 4)), "empty body", InputError);
}

TEST_CASE("squared EDT matches brute force on random masks") {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 25; ++t) {
    int w = std::uniform_int_distribution<int>(1, 23)(rng);
    int h = std::uniform_int_distribution<int>(1, 19)(rng);
    double p = std::uniform_real_distribution<double>(0.01, 0.5)(rng);
    BinaryMask m(w, h);
    std::bernoulli_distribution on(p);
    for (auto& b : m.bits()) b = on(rng) ? 1 : 0;
    if (m.empty()) m.set(w / 2, h / 2);
    CHECK(sq_edt(m).values() == oracle::brute_sq_edt(m));
  }
}

TEST_CASE("EDT is 1-Lipschitz") {
  BinaryMask m = fx::blob(96, 96, 5, 10);
  SqDistField d = sq_edt(m);
  int bad = 0;
  for (int y = 0; y < 96; ++y) {
    for (int x = 0; x + 1 < 96; ++x) {
      if (std::abs(std::sqrt(double(d.at(x, y))) - std::sqrt(double(d.at(x + 1, y)))) > 1.0 + 1e-12) ++bad;
    }
  }
  CHECK(bad == 0);
}

TEST_CASE("dilation is the strict open neighbourhood") {
  BinaryMask p = fx::pixels(9, 9, {{4, 4}});
  BinaryMask d15 = dilate(p, RadiusPx(1.5));
  CHECK(d15.count() == 9);
  for (int y = 3; y <= 5; ++y) {
    for (int x = 3; x <= 5; ++x) CHECK(d15.at(x, y));
  }
  CHECK(dilate(p, RadiusPx(1.0)) == p);

  BinaryMask blob = fx::blob(128, 128, 8, 30);
  CHECK(dilate(blob, RadiusPx(4.3)).subset_of(dilate(blob, RadiusPx(7.9))));
  CHECK_THROWS_AS(RadiusPx(0.0), InputError);
}

TEST_CASE("remote set is the lattice complement of the dilation") {
  BinaryMask blob = fx::blob(128, 128, 9, 30);
  CHECK(remote_set(blob, RadiusPx(6.5)).mask == dilate(blob, RadiusPx(6.5)).complement());

  BinaryMask p = fx::pixels(101, 101, {{50, 50}});
  RemoteSet rs = remote_set(p, RadiusPx(10.0));
  bool ok = true;
  for (int y = 0; y < 101; ++y) {
    for (int x = 0; x < 101; ++x) ok = ok && (rs.mask.at(x, y) == ((x - 50) * (x - 50) + (y - 50) * (y - 50) >= 100));
  }
  CHECK(ok);
  CHECK_FALSE(rs.empty);

  BinaryMask all(8, 8);
  for (auto& b : all.bits()) b = 1;
  RemoteSet none = remote_set(all, RadiusPx(2.0));
  CHECK(none.empty);
  CHECK(none.mask.empty());
}

TEST_CASE("hulloid examples") {
  const double r = 20.0001;
  SUBCASE("two pixels at distance 0.5R are unchanged") {
    BinaryMask m = fx::pixels(256, 256, {{123, 128}, {133, 128}});
    CHECK(hulloid(m, RadiusPx(r)).mask == m);
  }
  SUBCASE("triangle vertices at circumradius 0.9R gain the circumcenter") {
    BinaryMask m = fx::triangle_vertices(256, 256, {128, 128}, 0.9 * r);
    BinaryMask co = hulloid(m, RadiusPx(r)).mask;
    CHECK(m.subset_of(co));
    CHECK(co.count() > m.count());
    CHECK(co.at(128, 128));
  }
  SUBCASE("a disk is its own hulloid up to the band") {
    BinaryMask m = fx::disk(128, 128, {64, 64}, 25);
    BinaryMask co = hulloid(m, RadiusPx(r)).mask;
    CHECK(out_of_band(symdiff(co, m), boundary(m)) == 0);
  }
  SUBCASE("no avoiding ball gives the full window") {
    BinaryMask all(16, 16);
    for (auto& b : all.bits()) b = 1;
    all.set(8, 8, false);
    Hulloid h = hulloid(all, RadiusPx(3.0));
    CHECK(h.full_fallback);
    CHECK(h.mask.count() == 256);
  }
}

TEST_CASE("boundary examples") {
  BinaryMask p = fx::pixels(7, 7, {{3, 3}});
  CHECK(boundary(p) == p);
  BinaryMask sq = fx::filled_square(9, 9, {2, 2}, 5);
  CHECK(boundary(sq).count() == 16);
  BinaryMask all(6, 5);
  for (auto& b : all.bits()) b = 1;
  BinaryMask frame = boundary(all);
  CHECK(frame.count() == 2 * 6 + 2 * 3);
  CHECK_FALSE(frame.at(2, 2));
}

TEST_CASE("is_rbody examples") {
  const double r = 20.0001;
  CHECK(is_rbody(fx::pixels(256, 256, {{123, 128}, {133, 128}}), RadiusPx(r)).is_rbody);
  RbodyCheck tri = is_rbody(fx::triangle_vertices(256, 256, {128, 128}, 0.9 * r), RadiusPx(r));
  CHECK_FALSE(tri.is_rbody);
  REQUIRE_FALSE(tri.report.witnesses.empty());
  CHECK(dist(tri.report.witnesses.front().at, {128, 128}) <= 1.5);
  CHECK_FALSE(is_rbody(fx::square_outline(256, 256, {128, 128}, 0.8 * r), RadiusPx(r)).is_rbody);
}

TEST_CASE("convex hull raster") {
  BinaryMask tri = fx::pixels(32, 32, {{2, 3}, {28, 5}, {10, 27}});
  BinaryMask hull = convex_hull_mask(tri);
  auto inside = [](Point2 p) {
    Point2 a{2, 3}, b{28, 5}, c{10, 27};
    return cross(b - a, p - a) >= 0 && cross(c - b, p - b) >= 0 && cross(a - c, p - c) >= 0;
  };
  bool ok = true;
  for (int y = 0; y < 32; ++y) {
    for (int x = 0; x < 32; ++x) ok = ok && hull.at(x, y) == inside({double(x), double(y)});
  }
  CHECK(ok);

  BinaryMask line = fx::pixels(20, 20, {{2, 2}, {8, 5}, {14, 8}});
  BinaryMask seg = convex_hull_mask(line);
  CHECK(seg.count() == 7);
  CHECK(seg.at(4, 3));
  CHECK(seg.at(12, 7));

  for (const BinaryMask& m : small_blobs()) {
    BinaryMask co = hulloid(m, RadiusPx(12.0001)).mask;
    BinaryMask ch = convex_hull_mask(m);
    CHECK(out_of_band(co.minus(ch), boundary(ch)) == 0);
  }
}

TEST_CASE("hausdorff examples") {
  BinaryMask a = fx::blob(64, 64, 4, 10);
  CHECK(hausdorff(a, a) == 0.0);
  BinaryMask p(20, 20, {0, 0}, 0.5);
  BinaryMask q(20, 20, {0, 0}, 0.5);
  p.set(2, 2);
  q.set(5, 6);
  CHECK(hausdorff(p, q) == doctest::Approx(2.5));
  CHECK(hausdorff(a, dilate(a, RadiusPx(1.5))) <= std::sqrt(2.0) + 1e-12);
  CHECK_THROWS_AS(hausdorff(a, BinaryMask(64, 64)), InputError);
}

TEST_CASE("hulloid sweep converges to the convex hull") {
  BinaryMask sq = fx::filled_square(200, 200, {80, 80}, 40);
  auto sweep = hulloid_sweep(sq, {20, 40, 80, 160, 320});
  REQUIRE(sweep.size() == 5);
  for (std::size_t i = 1; i < sweep.size(); ++i) CHECK(sweep[i].hausdorff <= sweep[i - 1].hausdorff);
  CHECK(sweep.back().hausdorff <= 2.0);

  BinaryMask d = fx::disk(128, 128, {64, 64}, 30);
  for (const auto& e : hulloid_sweep(d, {5, 10, 40})) CHECK(e.hausdorff <= Tolerances{}.band_px);

  BinaryMask clusters = fx::pixels(64, 64, {{10, 30}, {11, 30}, {12, 30}, {40, 30}, {41, 30}});
  CHECK_THROWS_WITH_AS(hulloid_sweep(clusters, {5, 10}), "interior required", InputError);
  CHECK_THROWS_AS(hulloid_sweep(sq, {40, 20}), InputError);
}

TEST_CASE("hulloid properties on random blobs") {
  const RadiusPx r1(6.0001), r2(12.0001);
  for (const BinaryMask& m : small_blobs()) {
    BinaryMask co1 = hulloid(m, r1).mask;
    BinaryMask co2 = hulloid(m, r2).mask;
    // extensive, exactly
    CHECK(m.subset_of(co1));
    // idempotent within the band
    BinaryMask again = hulloid(co2, r2).mask;
    CHECK(out_of_band(symdiff(again, co2), boundary(co2)) == 0);
    // monotone in R within the band
    CHECK(out_of_band(co1.minus(co2), boundary(co2)) == 0);
    // boundary inclusion within the band, interior inclusion exactly
    CHECK(out_of_band(boundary(m).minus(boundary(co2)), boundary(co2)) == 0);
    BinaryMask int_m = m.minus(boundary(m));
    BinaryMask int_co = co2.minus(boundary(co2));
    CHECK(int_m.subset_of(int_co));
    // determinism
    CHECK(hulloid(m, r2).mask == co2);
  }
}

TEST_CASE("intersections of R-bodies are R-bodies") {
  const RadiusPx r(cases::kPairRadius);
  for (const auto& [a, b] : cases::rbody_pairs()) {
    REQUIRE(is_rbody(a, r).is_rbody);
    REQUIRE(is_rbody(b, r).is_rbody);
    BinaryMask ab = a & b;
    REQUIRE_FALSE(ab.empty());
    CHECK(is_rbody(ab, r).is_rbody);
  }
}

TEST_CASE("subsets of a line or of a large circle are R-bodies") {
  const double r = 15.0001;
  BinaryMask line(128, 64);
  for (int x = 10; x < 118; x += 7) line.set(x, 30);
  CHECK(is_rbody(line, RadiusPx(r)).is_rbody);

  BinaryMask arc(128, 128);
  for (int k = 0; k < 40; k += 3) {
    double phi = kTwoPi * k / 40.0;
    arc.set(int(std::lround(64 + 40 * std::cos(phi))), int(std::lround(64 + 40 * std::sin(phi))));
  }
  CHECK(is_rbody(arc, RadiusPx(r)).is_rbody);
}

TEST_CASE("identities hold on a disk at two resolutions") {
  BinaryMask coarse = fx::disk(128, 128, {63.5, 63.5}, 30);
  BinaryMask fine = fx::disk(256, 256, {127.5, 127.5}, 60);
  CheckReport c = identity_report(coarse, RadiusPx(16.0001));
  CheckReport f = identity_report(fine, RadiusPx(32.0001));
  CHECK(c.pass);
  CHECK(f.pass);
  // disagreements scale at most with the boundary length
  for (const char* k : {"identity1.symdiff", "identity2.symdiff"}) {
    CHECK(f.stats[k] <= 2.0 * c.stats[k] + 16.0);
  }

  CheckReport two = identity_report(fx::pixels(128, 128, {{60, 64}, {70, 64}}), RadiusPx(20.0001));
  CHECK(two.stats["identity1.out_of_band"] == 0);
  CHECK(two.stats["identity2.out_of_band"] == 0);
}

TEST_CASE("mask operations reject mismatched lattices") {
  BinaryMask a(8, 8), b(8, 9);
  CHECK_THROWS_WITH_AS(a & b, "inconsistent lattice headers", InputError);
}
