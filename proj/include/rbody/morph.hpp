#pragma once

// Distance transforms and the lattice realization of A_R, A'_R, co_R and the
// hulloid set identities.

#include <vector>

#include "rbody/mask.hpp"
#include "rbody/report.hpp"

namespace rbody {

/// Exact squared EDT (Meijster et al. separable scheme, integer arithmetic).
/// Throws InputError("empty body") when the mask has no foreground.
SqDistField sq_edt(const BinaryMask& m);

/// Pixels with squared distance < R² (open neighbourhood).
BinaryMask dilate(const BinaryMask& m, RadiusPx r);

struct RemoteSet {
  BinaryMask mask;
  bool empty = false;
};

/// Pixels with squared distance ≥ R²; the lattice complement of dilate().
RemoteSet remote_set(const BinaryMask& m, RadiusPx r);

struct Hulloid {
  BinaryMask mask;
  /// No lattice ball avoided the input, so the result is the whole window.
  bool full_fallback = false;
};

Hulloid hulloid(const BinaryMask& m, RadiusPx r);

/// Foreground pixels with a background 4-neighbour or lying on the lattice edge.
BinaryMask boundary(const BinaryMask& m);

/// Rasterized closed convex hull of the foreground pixel centers.
BinaryMask convex_hull_mask(const BinaryMask& m);

/// Symmetric Hausdorff distance between foreground sets, in length units.
double hausdorff(const BinaryMask& a, const BinaryMask& b);

/// Counts pixels of `diff` farther than band_px from every pixel of `edges`.
struct BandCheck {
  std::size_t disagreements = 0;
  std::size_t out_of_band = 0;
  double worst_px = 0.0;
  std::optional<Point2> worst_at;
};
BandCheck band_check(const BinaryMask& diff, const BinaryMask& edges, double band_px);

/// Both hulloid identities evaluated on the lattice:
///   co_R(E) = E_R ∩ (∂E_R)'_R   and   (∂E_R)'_R = co_R(E) ∪ E'_{2R}.
CheckReport identity_report(const BinaryMask& m, RadiusPx r, const Tolerances& tol = {});

struct RbodyCheck {
  bool is_rbody = false;
  CheckReport report;
};

/// Passes when hulloid(m) adds no pixel farther than band_px from ∂m.
RbodyCheck is_rbody(const BinaryMask& m, RadiusPx r, const Tolerances& tol = {});

/// True when some pixel has all eight neighbours in the foreground.
bool has_interior(const BinaryMask& m);

struct SweepEntry {
  double radius_px;
  double hausdorff;
};

/// Hausdorff distance from hulloid(m, r) to the convex hull for increasing radii.
std::vector<SweepEntry> hulloid_sweep(const BinaryMask& m, const std::vector<double>& radii_px);

}  // namespace rbody
