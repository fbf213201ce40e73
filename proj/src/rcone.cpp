#include "rbody/rcone.hpp"

#include <algorithm>
#include <vector>

namespace rbody {

namespace {

double halton(std::size_t index, std::size_t base) {
  double f = 1.0;
  double r = 0.0;
  while (index > 0) {
    f /= double(base);
    r += f * double(index % base);
    index /= base;
  }
  return r;
}

bool in_hemisphere(const ArcSet& k, const Tolerances& tol) {
  if (k.is_full()) return false;
  if (k.is_empty()) return true;
  auto g = k.gaps();
  return *std::max_element(g.begin(), g.end()) >= kPi - tol.eps_ang;
}

}  // namespace

ConeSpec::ConeSpec(ArcSet generators, double radius) : k_(std::move(generators)), r_(radius) {
  if (k_.is_empty()) throw InputError("cone generators must be nonempty");
  if (!(radius > 0.0) || !std::isfinite(radius)) throw InputError("radius must be positive");
}

ConeSpec ConeSpec::from_angles(std::span<const double> angles, double radius, const Tolerances& tol) {
  return ConeSpec(ArcSet::points(angles, tol), radius);
}

ConeSpec ConeSpec::from_arc(double mid, double halfwidth, double radius, const Tolerances& tol) {
  return ConeSpec(ArcSet::arc(mid, halfwidth, tol), radius);
}

const char* to_string(Sector2::Kind k) {
  switch (k) {
    case Sector2::Kind::zero:
      return "zero";
    case Sector2::Kind::ray:
      return "ray";
    case Sector2::Kind::line:
      return "line";
    case Sector2::Kind::sector:
      return "sector";
    case Sector2::Kind::halfplane:
      return "halfplane";
    case Sector2::Kind::full:
      return "full";
  }
  return "?";
}

Sector2 Sector2::from_directions(const ArcSet& dirs, const Tolerances& tol) {
  Sector2 s;
  s.dirs_ = dirs;
  if (dirs.is_empty()) {
    s.kind_ = Kind::zero;
  } else if (dirs.is_full()) {
    s.kind_ = Kind::full;
  } else if (dirs.size() == 1) {
    double hw = dirs.arcs().front().halfwidth;
    if (hw <= tol.eps_ang) {
      s.kind_ = Kind::ray;
    } else if (std::abs(hw - 0.5 * kPi) <= tol.eps_ang) {
      s.kind_ = Kind::halfplane;
    } else if (hw < 0.5 * kPi) {
      s.kind_ = Kind::sector;
    } else {
      throw InputError("directions do not form a convex cone");
    }
  } else if (dirs.size() == 2 && dirs.arcs()[0].halfwidth <= tol.eps_ang &&
             dirs.arcs()[1].halfwidth <= tol.eps_ang &&
             std::abs(angular_distance(dirs.arcs()[0].mid, dirs.arcs()[1].mid) - kPi) <= tol.eps_ang) {
    s.kind_ = Kind::line;
  } else {
    throw InputError("directions do not form a convex cone");
  }
  return s;
}

bool Sector2::contains(Point2 p, double eps) const {
  if (p.x == 0.0 && p.y == 0.0) return true;
  return dirs_.contains(angle_of(p), eps);
}

Sector2 Sector2::negated() const {
  Sector2 s = *this;
  s.dirs_ = dirs_.rotated(kPi);
  return s;
}

ArcSet dual_directions(const ArcSet& dirs, const Tolerances& tol) {
  if (dirs.is_empty()) return ArcSet::full();
  if (dirs.is_full()) return {};
  ArcSet acc = ArcSet::full();
  for (const Arc& a : dirs.arcs()) {
    if (a.halfwidth > 0.5 * kPi + tol.eps_ang) return {};
    acc = arcset_intersect(acc, ArcSet::arc(a.mid, std::max(0.0, 0.5 * kPi - a.halfwidth), tol), tol);
  }
  return acc;
}

double cone_clearance(const ConeSpec& c, Point2 x) {
  return distance_to_center_arcs(x, {0.0, 0.0}, c.radius(), c.generators());
}

bool cone_contains(const ConeSpec& c, Point2 x, const Tolerances& tol) {
  return cone_clearance(c, x) >= c.radius() - tol.eps_len;
}

Sector2 dual_sector(const ConeSpec& c, const Tolerances& tol) {
  return Sector2::from_directions(dual_directions(c.generators(), tol), tol);
}

Sector2 tangent_cone(const ConeSpec& c, const Tolerances& tol) { return dual_sector(c, tol).negated(); }

ArcSet normal_arcs(const ConeSpec& c, const Tolerances& tol) {
  const ArcSet& k = c.generators();
  if (k.is_full() || k.size() == 1) return k;
  std::vector<double> g = k.gaps();
  auto it = std::max_element(g.begin(), g.end());
  const double gmax = *it;
  const std::size_t i = static_cast<std::size_t>(it - g.begin());
  const Arc& after = k.arcs()[(i + 1) % k.size()];
  if (gmax > kPi + tol.eps_ang) {
    double len = kTwoPi - gmax;
    return ArcSet::arc(after.start() + 0.5 * len, 0.5 * len, tol);
  }
  if (gmax < kPi - tol.eps_ang) return ArcSet::full();
  // Largest gap is a half circle: co(K) is a closed half-plane, or a line when
  // K is just an antipodal pair.
  auto half_gaps = std::count_if(g.begin(), g.end(), [&](double x) { return std::abs(x - kPi) <= tol.eps_ang; });
  if (half_gaps == 2) return k;
  return ArcSet::arc(after.start() + 0.5 * kPi, 0.5 * kPi, tol);
}

SupportWitness support_recovery_witness(const ConeSpec& c, UnitVec2 v, std::size_t samples, const Tolerances& tol) {
  if (samples < 1) throw InputError("samples must be at least 1");
  const double r = c.radius();
  const Point2 center = r * v.vec();
  auto valid = [&](Point2 x) { return dist(x, center) < r - tol.eps_len && cone_clearance(c, x) >= r; };

  // Witnesses accumulate at 2Rv; probe toward it first.
  for (double eps = 1e-1; eps >= 1e-12; eps *= 0.1) {
    Point2 x = (2.0 * r * (1.0 - eps)) * v.vec();
    if (valid(x)) return {false, x};
  }
  for (std::size_t i = 1; i <= samples; ++i) {
    double rho = r * std::sqrt(halton(i, 2));
    double phi = kTwoPi * halton(i, 3);
    Point2 x = center + rho * Point2{std::cos(phi), std::sin(phi)};
    if (valid(x)) return {false, x};
  }
  return {true, std::nullopt};
}

CheckReport cone_equivalence_sample(const ConeSpec& k1, const ConeSpec& k2, std::size_t radial_samples,
                                    const Tolerances& tol) {
  if (k1.radius() != k2.radius()) throw InputError("cones must share the radius");
  if (radial_samples < 1) throw InputError("samples must be at least 1");
  const double r = k1.radius();
  constexpr int kAngles = 512;
  CheckReport rep;
  rep.check = "cone-equivalence";
  std::size_t mismatches = 0;
  std::size_t only_first = 0;
  for (std::size_t i = 0; i < radial_samples; ++i) {
    double rho = radial_samples == 1 ? 0.1 * r : r * (0.1 + 3.9 * double(i) / double(radial_samples - 1));
    for (int j = 0; j < kAngles; ++j) {
      double phi = kTwoPi * j / kAngles;
      Point2 x = rho * Point2{std::cos(phi), std::sin(phi)};
      bool in1 = cone_contains(k1, x, tol);
      bool in2 = cone_contains(k2, x, tol);
      if (in1 != in2) {
        if (mismatches == 0) rep.witnesses.push_back({in1 ? "in-first-only" : "in-second-only", x});
        ++mismatches;
        if (in1) ++only_first;
      }
    }
  }
  rep.stats["points"] = double(radial_samples * kAngles);
  rep.stats["mismatches"] = double(mismatches);
  rep.stats["in_first_only"] = double(only_first);
  rep.pass = mismatches == 0;
  if (!in_hemisphere(k1.generators(), tol)) rep.add_flag("first-not-in-hemisphere");
  if (!in_hemisphere(k2.generators(), tol)) rep.add_flag("second-not-in-hemisphere");
  return rep;
}

}  // namespace rbody
