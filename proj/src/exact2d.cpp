#include "rbody/exact2d.hpp"

#include <algorithm>
#include <limits>

namespace rbody {

const char* to_string(Membership m) {
  switch (m) {
    case Membership::in:
      return "in";
    case Membership::out:
      return "out";
    case Membership::ambiguous:
      return "boundary-ambiguous";
  }
  return "?";
}

SupportArcs supporting_arcs(const PointSet2& e, Point2 a, double radius, const Tolerances& tol) {
  if (!(radius > 0.0)) throw InputError("radius must be positive");
  ArcSet acc = ArcSet::full();
  for (const Point2& b : e) {
    double delta = dist(a, b);
    if (delta <= tol.eps_len) continue;
    double rhs = -delta / (2.0 * radius);
    if (rhs <= -1.0) continue;  // vacuous: |a−b| ≥ 2R
    acc = arcset_intersect(acc, ArcSet::arc(angle_of(a - b), std::acos(rhs), tol), tol);
    if (acc.is_empty()) break;
  }
  return {a, radius, std::move(acc)};
}

MembershipResult membership_corR(const PointSet2& e, Point2 y, double radius, const Tolerances& tol) {
  if (!(radius > 0.0)) throw InputError("radius must be positive");
  const auto& pts = e.points();
  const std::size_t n = pts.size();

  double best = -1.0;
  double best_interior = -1.0;
  auto consider = [&](Point2 x, bool interior) {
    double f = e.distance(x);
    best = std::max(best, f);
    if (interior) best_interior = std::max(best_interior, f);
  };

  // Voronoi vertices: circumcenters of triples (extra candidates are harmless,
  // each is scored with the true distance function).
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        auto c = circumcenter(pts[i], pts[j], pts[k]);
        if (!c) continue;
        double r = dist(*c, y);
        if (r <= radius) consider(*c, r < radius - tol.eps_len);
      }
    }
  }
  // Voronoi edges (bisector lines) crossing ∂D(y, R).
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      Point2 m = 0.5 * (pts[i] + pts[j]);
      Point2 d = pts[j] - pts[i];
      Point2 u = (1.0 / norm(d)) * Point2{-d.y, d.x};
      Point2 w = m - y;
      double bq = dot(u, w);
      double disc = bq * bq - (dot(w, w) - radius * radius);
      if (disc < 0.0) continue;
      double s = std::sqrt(disc);
      consider(m + (-bq - s) * u, false);
      consider(m + (-bq + s) * u, false);
    }
  }
  // Per-site antipodal points on ∂D(y, R).
  for (const Point2& b : pts) {
    double r = dist(y, b);
    if (r == 0.0) continue;
    consider(y + (radius / r) * (y - b), false);
  }

  MembershipResult res{Membership::ambiguous, best};
  if (e.find(y, tol.eps_len)) {
    res.verdict = Membership::in;
  } else if (best > radius + tol.eps_len) {
    res.verdict = Membership::out;
  } else if (best < radius - tol.eps_len) {
    res.verdict = Membership::in;
  } else if (best_interior >= radius) {
    res.verdict = Membership::out;
  }
  return res;
}

MembershipResult membership_corR_cones(const PointSet2& e, Point2 y, double radius, const Tolerances& tol) {
  if (!(radius > 0.0)) throw InputError("radius must be positive");
  double g = std::numeric_limits<double>::infinity();
  for (const Point2& a : e) {
    SupportArcs s = supporting_arcs(e, a, radius, tol);
    g = std::min(g, distance_to_center_arcs(y, a, radius, s.arcs));
  }
  MembershipResult res{Membership::ambiguous, g};
  if (e.find(y, tol.eps_len)) {
    res.verdict = Membership::in;
    return res;
  }
  double d0 = e.distance(y);
  if (std::abs(d0 - radius) <= tol.eps_len || std::abs(g - radius) <= tol.eps_len) return res;
  res.verdict = (d0 < radius && g > radius) ? Membership::in : Membership::out;
  return res;
}

ContactReport contact_points(const PointSet2& e, Point2 a, UnitVec2 v, double radius, const Tolerances& tol) {
  if (!(radius > 0.0)) throw InputError("radius must be positive");
  Point2 c = a + radius * v.vec();
  ContactReport rep{a, v, {}};
  for (const Point2& b : e) {
    double d = dist(b, c);
    if (d < radius - tol.eps_len) throw InputError("not supporting");
    if (std::abs(d - radius) <= tol.eps_len) rep.contacts.push_back(b);
  }
  return rep;
}

SupportingCircle supporting_circle(Point2 p, Point2 q, double radius, Point2 away_from, bool far_arc) {
  double d = dist(p, q);
  if (!(d > 0.0) || d >= 2.0 * radius) throw InputError("points must satisfy 0 < |p−q| < 2R");
  Point2 m = 0.5 * (p + q);
  Point2 n = (1.0 / d) * Point2{-(q - p).y, (q - p).x};
  double h = std::sqrt(radius * radius - 0.25 * d * d);
  if (dot(n, away_from - m) > 0.0) n = -1.0 * n;
  Point2 c = m + h * n;
  Point2 to_mid = (h > 0.0) ? (1.0 / h) * (m - c) : -1.0 * n;
  Point2 a = far_arc ? c - radius * to_mid : c + radius * to_mid;
  return {c, a, UnitVec2::from_vector(c - a)};
}

LensSpec::LensSpec(Point2 b1, Point2 b2, double radius) : b1_(b1), b2_(b2), r_(radius) {
  double d = dist(b1, b2);
  if (!(radius > 0.0) || !(d > 0.0) || !(d < 2.0 * radius)) {
    throw InputError("lens needs 0 < |b1−b2| < 2R");
  }
  Point2 m = 0.5 * (b1 + b2);
  Point2 n = (1.0 / d) * Point2{-(b2 - b1).y, (b2 - b1).x};
  double h = std::sqrt(radius * radius - 0.25 * d * d);
  c1_ = m + h * n;
  c2_ = m - h * n;
}

double LensSpec::width() const {
  double d = dist(b1_, b2_);
  return 2.0 * (r_ - std::sqrt(r_ * r_ - 0.25 * d * d));
}

bool lens_contains(const LensSpec& l, Point2 x, double slack) {
  const double r = l.radius();
  double worst = std::max(dist(x, l.apex1()), dist(x, l.apex2()));
  // Farthest point from x on each circle, when it lies on the center-lens boundary.
  auto far_on = [&](Point2 own, Point2 other) {
    double d = dist(x, own);
    if (d == 0.0) return;
    Point2 f = own + (r / d) * (own - x);
    if (dist(f, other) <= r * (1.0 + 1e-12)) worst = std::max(worst, d + r);
  };
  far_on(l.b1(), l.b2());
  far_on(l.b2(), l.b1());
  return worst <= r + slack;
}

ConvexityProfile nr_convexity_profile(const PointSet2& e, double radius, const Tolerances& tol) {
  ConvexityProfile prof;
  for (const Point2& a : e) {
    SupportArcs s = supporting_arcs(e, a, radius, tol);
    bool convex = arcset_is_sph_convex(s.arcs, tol);
    if (s.arcs.is_empty()) prof.any_empty = true;
    if (!convex) prof.all_convex = false;
    prof.entries.push_back({a, std::move(s.arcs), convex});
  }
  return prof;
}

}  // namespace rbody
