#include "rbody/geom.hpp"

#include <algorithm>
#include <limits>

namespace rbody {

void Tolerances::validate() const {
  if (!(eps_len > 0.0) || !(eps_ang > 0.0) || !(band_px > 0.0)) {
    throw InputError("tolerances must be strictly positive");
  }
}

double wrap_angle(double phi) {
  double r = std::fmod(phi, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  if (r >= kTwoPi) r = 0.0;
  return r;
}

double angular_distance(double a, double b) {
  double d = wrap_angle(a - b);
  return d > kPi ? kTwoPi - d : d;
}

UnitVec2 UnitVec2::from_vector(Point2 p) {
  if (p.x == 0.0 && p.y == 0.0) throw InputError("zero vector has no direction");
  return UnitVec2(angle_of(p));
}

Ball2::Ball2(Point2 c, double r, Openness o) : center(c), radius(r), openness(o) {
  if (!(r > 0.0)) throw InputError("ball radius must be positive");
}

bool Ball2::contains(Point2 p, double eps) const {
  double d = dist(p, center);
  return openness == Openness::open ? d < radius - eps : d <= radius + eps;
}

namespace {

// Half-open-free representation used internally: start in [0, 2π), length in [0, 2π].
struct Span {
  double lo;
  double len;
};

void build(std::vector<Span> spans, double eps, bool& full_out, std::vector<Arc>& out) {
  full_out = false;
  out.clear();
  for (auto& s : spans) {
    if (s.len >= kTwoPi - eps) {
      full_out = true;
      return;
    }
    s.lo = wrap_angle(s.lo);
  }
  std::sort(spans.begin(), spans.end(), [](const Span& a, const Span& b) { return a.lo < b.lo; });

  std::vector<std::pair<double, double>> merged;  // [s, e], e may exceed 2π
  for (const auto& s : spans) {
    double e = s.lo + s.len;
    if (!merged.empty() && s.lo <= merged.back().second + eps) {
      merged.back().second = std::max(merged.back().second, e);
    } else {
      merged.emplace_back(s.lo, e);
    }
  }
  // Close the circle: the last interval may run past 2π into the first ones.
  while (merged.size() > 1 && merged.back().second >= merged.front().first + kTwoPi - eps) {
    merged.back().second = std::max(merged.back().second, merged.front().second + kTwoPi);
    merged.erase(merged.begin());
  }
  for (const auto& [s, e] : merged) {
    if (e - s >= kTwoPi - eps) {
      full_out = true;
      out.clear();
      return;
    }
    out.push_back({wrap_angle(s + 0.5 * (e - s)), 0.5 * (e - s)});
  }
  std::sort(out.begin(), out.end(), [](const Arc& a, const Arc& b) { return a.mid < b.mid; });
}

// Splits the set into linear pieces of [0, 2π].
std::vector<std::pair<double, double>> linear_pieces(const ArcSet& a) {
  std::vector<std::pair<double, double>> out;
  if (a.is_full()) {
    out.emplace_back(0.0, kTwoPi);
    return out;
  }
  for (const auto& arc : a.arcs()) {
    double lo = wrap_angle(arc.start());
    double hi = lo + 2.0 * arc.halfwidth;
    if (hi > kTwoPi) {
      out.emplace_back(lo, kTwoPi);
      out.emplace_back(0.0, hi - kTwoPi);
    } else {
      out.emplace_back(lo, hi);
    }
  }
  return out;
}

}  // namespace

ArcSet ArcSet::full() {
  ArcSet s;
  s.full_ = true;
  return s;
}

ArcSet ArcSet::arc(double mid, double halfwidth, const Tolerances& tol) {
  Arc a{mid, halfwidth};
  return from_arcs(std::span<const Arc>(&a, 1), tol);
}

ArcSet ArcSet::points(std::span<const double> angles, const Tolerances& tol) {
  std::vector<Arc> arcs;
  arcs.reserve(angles.size());
  for (double phi : angles) arcs.push_back({phi, 0.0});
  return from_arcs(arcs, tol);
}

ArcSet ArcSet::from_arcs(std::span<const Arc> arcs, const Tolerances& tol) {
  std::vector<Span> spans;
  spans.reserve(arcs.size());
  for (const auto& a : arcs) {
    if (!std::isfinite(a.mid) || !std::isfinite(a.halfwidth) || a.halfwidth < 0.0) {
      throw InputError("arc needs finite mid and nonnegative halfwidth");
    }
    double hw = std::min(a.halfwidth, kPi);
    spans.push_back({a.mid - hw, 2.0 * hw});
  }
  ArcSet s;
  build(std::move(spans), tol.eps_ang, s.full_, s.arcs_);
  return s;
}

bool ArcSet::contains(double phi, double eps) const {
  if (full_) return true;
  return std::any_of(arcs_.begin(), arcs_.end(), [&](const Arc& a) {
    return angular_distance(phi, a.mid) <= a.halfwidth + eps;
  });
}

double ArcSet::measure() const {
  if (full_) return kTwoPi;
  double m = 0.0;
  for (const auto& a : arcs_) m += 2.0 * a.halfwidth;
  return m;
}

std::vector<double> ArcSet::gaps() const {
  std::vector<double> g;
  if (full_ || arcs_.empty()) return g;
  const std::size_t n = arcs_.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Arc& a = arcs_[i];
    const Arc& b = arcs_[(i + 1) % n];
    double gap = wrap_angle(b.start() - a.end());
    if (n == 1) gap = kTwoPi - 2.0 * a.halfwidth;
    g.push_back(gap);
  }
  return g;
}

ArcSet ArcSet::rotated(double by) const {
  if (full_) return full();
  std::vector<Arc> arcs = arcs_;
  for (auto& a : arcs) a.mid += by;
  return from_arcs(arcs);
}

ArcSet arcset_intersect(const ArcSet& a, const ArcSet& b, const Tolerances& tol) {
  if (a.is_full()) return b;
  if (b.is_full()) return a;
  if (a.is_empty() || b.is_empty()) return {};
  auto pa = linear_pieces(a);
  auto pb = linear_pieces(b);
  std::vector<Arc> out;
  for (const auto& [alo, ahi] : pa) {
    for (const auto& [blo, bhi] : pb) {
      double lo = std::max(alo, blo);
      double hi = std::min(ahi, bhi);
      if (lo <= hi + tol.eps_ang) {
        hi = std::max(lo, hi);
        out.push_back({0.5 * (lo + hi), 0.5 * (hi - lo)});
      }
    }
  }
  return ArcSet::from_arcs(out, tol);
}

bool arcset_is_sph_convex(const ArcSet& a, const Tolerances& tol) {
  if (a.is_full() || a.size() != 1) return false;
  return a.arcs().front().halfwidth <= 0.5 * kPi + tol.eps_ang;
}

bool arcset_equal(const ArcSet& a, const ArcSet& b, double eps) {
  if (a.is_full() || b.is_full()) return a.is_full() == b.is_full();
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const Arc& x = a.arcs()[i];
    const Arc& y = b.arcs()[i];
    if (angular_distance(x.mid, y.mid) > eps || std::abs(x.halfwidth - y.halfwidth) > eps) {
      return false;
    }
  }
  return true;
}

double distance_to_center_arcs(Point2 y, Point2 center, double radius, const ArcSet& dirs) {
  if (dirs.is_empty()) return std::numeric_limits<double>::infinity();
  Point2 p = y - center;
  double r = norm(p);
  if (r == 0.0) return radius;
  double theta = angle_of(p);
  if (dirs.contains(theta, 0.0)) return std::abs(r - radius);
  double best = std::numeric_limits<double>::infinity();
  for (const auto& a : dirs.arcs()) {
    for (double phi : {a.start(), a.end()}) {
      Point2 c = center + radius * Point2{std::cos(phi), std::sin(phi)};
      best = std::min(best, dist(y, c));
    }
  }
  return best;
}

PointSet2::PointSet2(std::vector<Point2> pts, const Tolerances& tol) : pts_(std::move(pts)) {
  if (pts_.empty()) throw InputError("point set must be nonempty");
  for (std::size_t i = 0; i < pts_.size(); ++i) {
    if (!std::isfinite(pts_[i].x) || !std::isfinite(pts_[i].y)) {
      throw InputError("point coordinates must be finite");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (dist(pts_[i], pts_[j]) <= tol.eps_len) throw InputError("points must be pairwise distinct");
    }
  }
}

double PointSet2::distance(Point2 y) const {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& p : pts_) best = std::min(best, dist(p, y));
  return best;
}

std::optional<std::size_t> PointSet2::find(Point2 y, double eps) const {
  for (std::size_t i = 0; i < pts_.size(); ++i) {
    if (dist(pts_[i], y) <= eps) return i;
  }
  return std::nullopt;
}

std::optional<Point2> circumcenter(Point2 a, Point2 b, Point2 c) {
  Point2 ab = b - a;
  Point2 ac = c - a;
  double d = 2.0 * cross(ab, ac);
  double scale = std::max(dot(ab, ab), dot(ac, ac));
  if (std::abs(d) <= 1e-12 * scale) return std::nullopt;
  double ab2 = dot(ab, ab);
  double ac2 = dot(ac, ac);
  Point2 off{(ac.y * ab2 - ab.y * ac2) / d, (ab.x * ac2 - ac.x * ab2) / d};
  return a + off;
}

}  // namespace rbody
