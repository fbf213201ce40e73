#pragma once

// R-cones C_K = ⋂_{v∈K} B(Rv, R)^c with vertex at the origin, their tangent
// and normal cones, and sampled checks of support recovery and equivalence.

#include <cstddef>
#include <optional>
#include <string>

#include "rbody/geom.hpp"
#include "rbody/report.hpp"

namespace rbody {

class ConeSpec {
 public:
  ConeSpec(ArcSet generators, double radius);
  static ConeSpec from_angles(std::span<const double> angles, double radius, const Tolerances& tol = {});
  static ConeSpec from_arc(double mid, double halfwidth, double radius, const Tolerances& tol = {});

  const ArcSet& generators() const { return k_; }
  double radius() const { return r_; }

 private:
  ArcSet k_;
  double r_;
};

/// A closed convex planar cone, stored by its set of unit directions.
class Sector2 {
 public:
  enum class Kind { zero, ray, line, sector, halfplane, full };

  static Sector2 from_directions(const ArcSet& dirs, const Tolerances& tol = {});

  Kind kind() const { return kind_; }
  const ArcSet& directions() const { return dirs_; }
  bool contains(Point2 p, double eps = Tolerances{}.eps_ang) const;
  Sector2 negated() const;

 private:
  Kind kind_ = Kind::zero;
  ArcSet dirs_;
};

const char* to_string(Sector2::Kind k);

/// Unit directions of the dual cone {y : ⟨y, v⟩ ≥ 0 for all v with angle in dirs}.
ArcSet dual_directions(const ArcSet& dirs, const Tolerances& tol = {});

/// min over v ∈ K of |x − Rv|.
double cone_clearance(const ConeSpec& c, Point2 x);

/// x ∈ C_K, closed: |x − Rv| ≥ R for every generator v.
bool cone_contains(const ConeSpec& c, Point2 x, const Tolerances& tol = {});

Sector2 dual_sector(const ConeSpec& c, const Tolerances& tol = {});

/// Tan(C_K) at the vertex: the point reflection of the dual cone.
Sector2 tangent_cone(const ConeSpec& c, const Tolerances& tol = {});

/// co(K) ∩ S¹, the spherical convex hull of the generators.
ArcSet normal_arcs(const ConeSpec& c, const Tolerances& tol = {});

struct SupportWitness {
  bool supports = true;
  std::optional<Point2> witness;
};

/// Searches B(Rv) for a point of C_K. No witness means v is reported as R-supporting.
SupportWitness support_recovery_witness(const ConeSpec& c, UnitVec2 v, std::size_t samples,
                                        const Tolerances& tol = {});

/// Compares membership in C_K1 and C_K2 on an annular grid
/// (radii 0.1R…4R, angular pitch 2π/512).
CheckReport cone_equivalence_sample(const ConeSpec& k1, const ConeSpec& k2, std::size_t radial_samples,
                                    const Tolerances& tol = {});

}  // namespace rbody
