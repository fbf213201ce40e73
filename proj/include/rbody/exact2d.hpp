#pragma once

// Exact planar computations on finite point sets: R-supporting direction
// arcs, two independent membership tests for co_R(E), contact counting on
// supporting circles and the spindle (lens) predicate.

#include <vector>

#include "rbody/geom.hpp"

namespace rbody {

struct SupportArcs {
  Point2 base;
  double radius;
  ArcSet arcs;
};

/// Directions v with ⟨v, a−b⟩ ≥ −|a−b|²/2R for every b ∈ E∖{a}.
SupportArcs supporting_arcs(const PointSet2& e, Point2 a, double radius, const Tolerances& tol = {});

enum class Membership { in, out, ambiguous };

const char* to_string(Membership m);

struct MembershipResult {
  Membership verdict;
  /// corR: max of dist(·, E) over D(y, R).  cones: min distance from y to a supporting center.
  double clearance;
};

/// Decides y ∈ co_R(E) by maximizing dist(·, E) over the closed disk D(y, R).
MembershipResult membership_corR(const PointSet2& e, Point2 y, double radius, const Tolerances& tol = {});

/// Decides y ∈ co_R(E) as E_R ∩ ⋂_a C^a_{N_R(E,a)}.
MembershipResult membership_corR_cones(const PointSet2& e, Point2 y, double radius,
                                       const Tolerances& tol = {});

struct ContactReport {
  Point2 query;
  UnitVec2 direction;
  std::vector<Point2> contacts;
};

/// Points of E on the boundary of B(a + Rv, R). Throws InputError("not supporting")
/// when that open ball meets E.
ContactReport contact_points(const PointSet2& e, Point2 a, UnitVec2 v, double radius,
                             const Tolerances& tol = {});

struct SupportingCircle {
  Point2 center;
  /// Midpoint of the chosen arc of the circle between the two points.
  Point2 arc_mid;
  /// Unit direction from arc_mid toward center.
  UnitVec2 inward;
};

/// The radius-R circle through p and q whose center lies on the side opposite `away_from`.
/// `far_arc` selects the major arc midpoint instead of the minor one.
SupportingCircle supporting_circle(Point2 p, Point2 q, double radius, Point2 away_from, bool far_arc = false);

class LensSpec {
 public:
  LensSpec(Point2 b1, Point2 b2, double radius);

  Point2 b1() const { return b1_; }
  Point2 b2() const { return b2_; }
  double radius() const { return r_; }
  /// The two points at distance R from both b1 and b2.
  Point2 apex1() const { return c1_; }
  Point2 apex2() const { return c2_; }
  /// Width of the spindle across the b1–b2 axis.
  double width() const;

 private:
  Point2 b1_, b2_;
  double r_;
  Point2 c1_, c2_;
};

/// True iff every closed R-disk containing b1 and b2 contains x (up to `slack`).
bool lens_contains(const LensSpec& l, Point2 x, double slack);
inline bool lens_contains(const LensSpec& l, Point2 x) { return lens_contains(l, x, Tolerances{}.eps_len); }

struct ConvexityEntry {
  Point2 point;
  ArcSet arcs;
  bool sph_convex;
};

struct ConvexityProfile {
  std::vector<ConvexityEntry> entries;
  bool any_empty = false;
  bool all_convex = true;
};

ConvexityProfile nr_convexity_profile(const PointSet2& e, double radius, const Tolerances& tol = {});

}  // namespace rbody
