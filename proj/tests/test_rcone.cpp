#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "rbody/rcone.hpp"

using namespace rbody;

namespace {

std::vector<double> angles(std::initializer_list<double> a) { return a; }

// Does direction phi satisfy ⟨u, v⟩ ≥ 0 for every sampled v of K?
bool in_dual_sampled(const ArcSet& k, double phi) {
  Point2 u = UnitVec2(phi).vec();
  for (int i = 0; i < 4096; ++i) {
    double psi = kTwoPi * i / 4096;
    if (k.contains(psi, 0.0) && dot(u, UnitVec2(psi).vec()) < -1e-12) return false;
  }
  for (const Arc& a : k.arcs()) {
    if (dot(u, UnitVec2(a.start()).vec()) < -1e-12 || dot(u, UnitVec2(a.end()).vec()) < -1e-12) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("cone membership examples") {
  ConeSpec k = ConeSpec::from_angles(angles({0.0}), 1.0);
  CHECK(cone_contains(k, {-1, 0}));
  CHECK_FALSE(cone_contains(k, {0.5, 0}));
  std::mt19937_64 rng(41);
  for (int i = 0; i < 50; ++i) {
    ArcSet g = oracle::random_arcset(rng);
    if (!g.is_empty()) CHECK(cone_contains(ConeSpec(g, 1.0), {0, 0}));
  }
  CHECK_THROWS_AS(ConeSpec(ArcSet::empty(), 1.0), InputError);
  CHECK_THROWS_AS(ConeSpec(ArcSet::full(), -1.0), InputError);
}

TEST_CASE("dual sector examples") {
  Sector2 h = dual_sector(ConeSpec::from_angles(angles({0.0}), 1.0));
  CHECK(h.kind() == Sector2::Kind::halfplane);
  CHECK(h.directions().arcs()[0].mid == doctest::Approx(0.0));

  Sector2 q = dual_sector(ConeSpec::from_angles(angles({0.0, kPi / 2}), 1.0));
  CHECK(q.kind() == Sector2::Kind::sector);
  CHECK(q.directions().arcs()[0].mid == doctest::Approx(kPi / 4));
  CHECK(q.directions().arcs()[0].halfwidth == doctest::Approx(kPi / 4));

  ConeSpec spread = ConeSpec::from_angles(angles({0.0, 3 * kPi / 4, 3 * kPi / 2}), 1.0);
  CHECK(dual_sector(spread).kind() == Sector2::Kind::zero);
  int survivors = 0;
  for (int i = 0; i < 10000; ++i) survivors += in_dual_sampled(spread.generators(), kTwoPi * (i + 0.5) / 10000);
  CHECK(survivors == 0);
}

TEST_CASE("dual directions match brute force on random generator sets") {
  std::mt19937_64 rng(42);
  int mismatches = 0;
  for (int t = 0; t < 60; ++t) {
    ArcSet k = oracle::random_arcset(rng);
    if (k.is_empty()) continue;
    ArcSet d = dual_directions(k);
    for (int i = 0; i < 256; ++i) {
      double phi = kTwoPi * (i + 0.5) / 256;
      if (d.contains(phi, 1e-6) != in_dual_sampled(k, phi) && !d.contains(phi, -1e-6)) {
        if (!(d.contains(phi, 1e-3) && !d.contains(phi, 0.0))) ++mismatches;
      }
    }
  }
  CHECK(mismatches == 0);
}

TEST_CASE("tangent cone examples") {
  Sector2 h = tangent_cone(ConeSpec::from_angles(angles({0.0}), 1.0));
  CHECK(h.kind() == Sector2::Kind::halfplane);
  CHECK(h.contains({-1, 0.3}));
  CHECK_FALSE(h.contains({0.2, 1}));

  ConeSpec quarter = ConeSpec::from_arc(kPi / 4, kPi / 4, 1.0);
  Sector2 s = tangent_cone(quarter);
  CHECK(s.kind() == Sector2::Kind::sector);
  CHECK(s.directions().arcs()[0].mid == doctest::Approx(5 * kPi / 4));
  CHECK(s.directions().arcs()[0].halfwidth == doctest::Approx(kPi / 4));

  std::mt19937_64 rng(43);
  std::uniform_real_distribution<double> u(-1, 1);
  int outside = 0;
  for (int i = 0; i < 100; ++i) {
    const Arc& a = s.directions().arcs()[0];
    double phi = a.mid + a.halfwidth * u(rng);
    for (double lam : {0.1, 0.5, 1.0, 2.0, 5.0, 10.0}) outside += !cone_contains(quarter, lam * UnitVec2(phi).vec());
  }
  CHECK(outside == 0);
}

TEST_CASE("normal arcs examples") {
  ArcSet q = normal_arcs(ConeSpec::from_angles(angles({0.0, kPi / 2}), 1.0));
  REQUIRE(q.size() == 1);
  CHECK(q.arcs()[0].mid == doctest::Approx(kPi / 4));
  CHECK(q.arcs()[0].halfwidth == doctest::Approx(kPi / 4));

  ArcSet one = normal_arcs(ConeSpec::from_angles(angles({1.0}), 1.0));
  CHECK(one.size() == 1);
  CHECK(one.arcs()[0].halfwidth == 0.0);

  ArcSet line = normal_arcs(ConeSpec::from_angles(angles({0.3, 0.3 + kPi}), 1.0));
  CHECK(line.size() == 2);
  CHECK(line.measure() == doctest::Approx(0.0));
  CHECK(tangent_cone(ConeSpec::from_angles(angles({0.3, 0.3 + kPi}), 1.0)).kind() == Sector2::Kind::line);

  ArcSet half = normal_arcs(ConeSpec::from_angles(angles({0.0, kPi / 2, kPi}), 1.0));
  REQUIRE(half.size() == 1);
  CHECK(half.arcs()[0].mid == doctest::Approx(kPi / 2));
  CHECK(half.arcs()[0].halfwidth == doctest::Approx(kPi / 2));

  CHECK(normal_arcs(ConeSpec::from_angles(angles({0.0, 2.0, 4.0}), 1.0)).is_full());
}

TEST_CASE("normal arcs equal the negated dual of the tangent cone") {
  std::mt19937_64 rng(44);
  std::uniform_real_distribution<double> mid(0.0, kTwoPi);
  std::uniform_real_distribution<double> hw(0.0, 0.45 * kPi);
  for (int t = 0; t < 50; ++t) {
    // generators inside an open half circle
    double m = mid(rng), w = hw(rng);
    std::uniform_real_distribution<double> off(-w, w);
    std::vector<double> a{m - w, m + w, m + off(rng), m + off(rng)};
    ConeSpec k = ConeSpec::from_angles(a, 1.0);
    ArcSet nor = normal_arcs(k);
    Sector2 tan = tangent_cone(k);
    ArcSet back = dual_directions(tan.directions()).rotated(kPi);
    CHECK(arcset_equal(nor, back, 1e-9));
  }
}

TEST_CASE("support recovery") {
  ConeSpec single = ConeSpec::from_angles(angles({0.8}), 1.0);
  CHECK(support_recovery_witness(single, UnitVec2(0.8), 2048).supports);
  for (double gap : {1e-3, 0.1, 1.0, 3.0}) {
    SupportWitness w = support_recovery_witness(single, UnitVec2(0.8 + gap), 2048);
    CHECK_FALSE(w.supports);
    REQUIRE(w.witness);
    CHECK(cone_contains(single, *w.witness));
  }
  SupportWitness near = support_recovery_witness(single, UnitVec2(1.0), 2048);
  REQUIRE(near.witness);
  CHECK(dist(*near.witness, 2.0 * UnitVec2(1.0).vec()) < 0.25);

  ConeSpec pair = ConeSpec::from_angles(angles({0.0, 2 * kPi / 3}), 1.0);
  CHECK_FALSE(support_recovery_witness(pair, UnitVec2(kPi / 3), 2048).supports);

  ConeSpec quarter = ConeSpec::from_arc(kPi / 4, kPi / 4, 1.0);
  CHECK(support_recovery_witness(quarter, UnitVec2(kPi / 4), 2048).supports);

  CHECK_THROWS_AS(support_recovery_witness(quarter, UnitVec2(0.0), 0), InputError);
}

TEST_CASE("every generator supports, and only generators do") {
  std::mt19937_64 rng(45);
  std::uniform_real_distribution<double> u(0.0, kTwoPi);
  for (int t = 0; t < 10; ++t) {
    std::vector<double> a{u(rng), u(rng), u(rng)};
    ConeSpec k = ConeSpec::from_angles(a, 1.0);
    for (double g : a) CHECK(support_recovery_witness(k, UnitVec2(g), 512).supports);
    for (int i = 0; i < 360; ++i) {
      double phi = kTwoPi * i / 360;
      bool near_gen = false;
      for (double g : a) near_gen = near_gen || angular_distance(phi, g) <= 1e-9;
      CHECK(support_recovery_witness(k, UnitVec2(phi), 256).supports == near_gen);
    }
  }
}

TEST_CASE("cone equivalence sampling") {
  ConeSpec quarter = ConeSpec::from_arc(kPi / 4, kPi / 4, 1.0);
  CHECK(cone_equivalence_sample(quarter, ConeSpec(normal_arcs(quarter), 1.0), 64).pass);
  CHECK(cone_equivalence_sample(quarter, quarter, 16).pass);

  ConeSpec ends = ConeSpec::from_angles(angles({0.0, kPi / 2}), 1.0);
  CheckReport r = cone_equivalence_sample(ends, quarter, 64);
  CHECK_FALSE(r.pass);
  REQUIRE_FALSE(r.witnesses.empty());
  Point2 w = r.witnesses.front().at;
  CHECK(cone_contains(ends, w));
  CHECK_FALSE(cone_contains(quarter, w));

  CheckReport wide = cone_equivalence_sample(ConeSpec::from_angles(angles({0.0, 2.0, 4.0}), 1.0),
                                             ConeSpec::from_angles(angles({0.0, 2.0, 4.0}), 1.0), 4);
  CHECK(wide.has_flag("first-not-in-hemisphere"));
  CHECK_THROWS_AS(cone_equivalence_sample(quarter, ConeSpec(quarter.generators(), 2.0), 4), InputError);
}

TEST_CASE("monotonicity in the generator set") {
  std::mt19937_64 rng(46);
  std::uniform_real_distribution<double> u(-4, 4);
  int violations = 0;
  for (int t = 0; t < 40; ++t) {
    ArcSet big = oracle::random_arcset(rng);
    if (big.is_empty() || big.is_full()) continue;
    const Arc& a = big.arcs().front();
    ArcSet small = ArcSet::arc(a.mid, 0.5 * a.halfwidth);
    ConeSpec kb(big, 1.0), ks(small, 1.0);
    for (int i = 0; i < 500; ++i) {
      Point2 x{u(rng), u(rng)};
      if (cone_contains(kb, x) && !cone_contains(ks, x)) ++violations;
    }
  }
  CHECK(violations == 0);
}

TEST_CASE("nonzero tangent directions stay strictly inside the cone") {
  std::mt19937_64 rng(47);
  std::uniform_real_distribution<double> mid(0.0, kTwoPi), hw(0.0, 0.49 * kPi), s(-1, 1);
  for (int t = 0; t < 30; ++t) {
    ConeSpec k = ConeSpec::from_arc(mid(rng), hw(rng), 1.0);
    Sector2 tan = tangent_cone(k);
    const Arc& a = tan.directions().arcs().front();
    for (int i = 0; i < 20; ++i) {
      Point2 p = std::pow(10.0, 2 * s(rng)) * UnitVec2(a.mid + a.halfwidth * s(rng)).vec();
      CHECK(cone_clearance(k, p) > 1.0);
    }
  }
}

TEST_CASE("sector kinds") {
  CHECK(std::string(to_string(Sector2::from_directions(ArcSet::empty()).kind())) == "zero");
  CHECK(Sector2::from_directions(ArcSet::full()).kind() == Sector2::Kind::full);
  CHECK(Sector2::from_directions(ArcSet::arc(1.0, 0.0)).kind() == Sector2::Kind::ray);
  CHECK_THROWS_AS(Sector2::from_directions(ArcSet::arc(1.0, 2.0)), InputError);
}
