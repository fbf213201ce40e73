#pragma once

// Planar primitives, unit-circle arc algebra and the shared tolerance policy.

#include <cmath>
#include <numbers>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace rbody {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Thrown for malformed inputs and violated preconditions.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Tolerances {
  double eps_len = 1e-9;  ///< absolute length tolerance
  double eps_ang = 1e-9;  ///< absolute angle tolerance (radians)
  double band_px = 1.5;   ///< grid agreement band, pixel units

  void validate() const;
};

struct Point2 {
  double x = 0.0;
  double y = 0.0;

  friend Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
  friend Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
  friend Point2 operator*(double s, Point2 a) { return {s * a.x, s * a.y}; }
  friend Point2 operator*(Point2 a, double s) { return {s * a.x, s * a.y}; }
  friend bool operator==(Point2 a, Point2 b) = default;
};

inline double dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point2 a, Point2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point2 a) { return std::hypot(a.x, a.y); }
inline double dist(Point2 a, Point2 b) { return norm(a - b); }
inline double angle_of(Point2 a) { return std::atan2(a.y, a.x); }

/// Reduces an angle to [0, 2π).
double wrap_angle(double phi);

/// Shortest angular distance, in [0, π].
double angular_distance(double a, double b);

/// A point of S¹ stored as its angle.
class UnitVec2 {
 public:
  UnitVec2() = default;
  explicit UnitVec2(double angle) : angle_(wrap_angle(angle)) {}
  static UnitVec2 from_vector(Point2 p);

  double angle() const { return angle_; }
  Point2 vec() const { return {std::cos(angle_), std::sin(angle_)}; }
  UnitVec2 operator-() const { return UnitVec2(angle_ + kPi); }

 private:
  double angle_ = 0.0;
};

enum class Openness { open, closed };

struct Ball2 {
  Point2 center;
  double radius = 1.0;
  Openness openness = Openness::open;

  Ball2(Point2 c, double r, Openness o = Openness::open);
  bool contains(Point2 p, double eps = 0.0) const;
};

/// Closed arc {φ : |φ − mid| ≤ halfwidth (mod 2π)}; halfwidth = π is the full circle.
struct Arc {
  double mid = 0.0;
  double halfwidth = 0.0;

  double start() const { return mid - halfwidth; }
  double end() const { return mid + halfwidth; }
};

/// Finite union of pairwise disjoint closed arcs, kept canonical:
/// sorted by mid, arcs separated by less than eps_ang merged.
class ArcSet {
 public:
  ArcSet() = default;

  static ArcSet empty() { return {}; }
  static ArcSet full();
  static ArcSet arc(double mid, double halfwidth, const Tolerances& tol = {});
  static ArcSet points(std::span<const double> angles, const Tolerances& tol = {});
  static ArcSet from_arcs(std::span<const Arc> arcs, const Tolerances& tol = {});

  const std::vector<Arc>& arcs() const { return arcs_; }
  bool is_empty() const { return !full_ && arcs_.empty(); }
  bool is_full() const { return full_; }
  std::size_t size() const { return arcs_.size(); }

  /// Membership with the closed-arc convention (ties counted inside).
  bool contains(double phi, double eps) const;
  bool contains(double phi) const { return contains(phi, Tolerances{}.eps_ang); }
  double measure() const;
  /// Lengths of the open gaps between consecutive arcs, in circular order.
  std::vector<double> gaps() const;
  ArcSet rotated(double by) const;

  friend bool operator==(const ArcSet&, const ArcSet&) = default;

 private:
  std::vector<Arc> arcs_;
  bool full_ = false;
};

ArcSet arcset_intersect(const ArcSet& a, const ArcSet& b, const Tolerances& tol = {});

/// In S¹, spherically convex means a single arc of halfwidth ≤ π/2.
bool arcset_is_sph_convex(const ArcSet& a, const Tolerances& tol = {});

/// Approximate set equality: same number of arcs with matching endpoints.
bool arcset_equal(const ArcSet& a, const ArcSet& b, double eps);

/// Distance from y to the circle arc {center + R·v : angle(v) ∈ dirs}.
/// Returns +∞ for an empty set.
double distance_to_center_arcs(Point2 y, Point2 center, double radius, const ArcSet& dirs);

/// A finite set of pairwise distinct planar points.
class PointSet2 {
 public:
  explicit PointSet2(std::vector<Point2> pts, const Tolerances& tol = {});

  const std::vector<Point2>& points() const { return pts_; }
  std::size_t size() const { return pts_.size(); }
  const Point2& operator[](std::size_t i) const { return pts_[i]; }
  auto begin() const { return pts_.begin(); }
  auto end() const { return pts_.end(); }

  /// Euclidean distance from y to the nearest point.
  double distance(Point2 y) const;
  std::optional<std::size_t> find(Point2 y, double eps) const;

 private:
  std::vector<Point2> pts_;
};

/// Circumcenter of a triangle; nullopt when (nearly) collinear.
std::optional<Point2> circumcenter(Point2 a, Point2 b, Point2 c);

}  // namespace rbody
