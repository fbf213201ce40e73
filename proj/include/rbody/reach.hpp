#pragma once

// Reach ≥ R certification: the spindle-connectivity criterion on masks, the
// planar spherical-convexity theorem, and the rolling-set corollary.
//
// Mask radii are in pixels; reported witnesses are lattice coordinates.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rbody/exact2d.hpp"
#include "rbody/mask.hpp"
#include "rbody/morph.hpp"

namespace rbody {

enum class ReachVerdict { certified, inconclusive_pass, refuted, inconclusive };
enum class ReachMethod { lens, d2_convexity, walther };

const char* to_string(ReachVerdict v);
const char* to_string(ReachMethod m);

struct PairWitness {
  Point2 b1;
  Point2 b2;
  /// 8-connected components of A ∩ 𝔥(b1, b2).
  int components = 0;
};

struct ReachReport {
  ReachVerdict verdict = ReachVerdict::inconclusive;
  ReachMethod method = ReachMethod::lens;
  std::optional<PairWitness> pair;
  std::optional<Point2> point;
  std::map<std::string, double> stats;
  std::vector<std::string> flags;

  /// certified, or passed on a sample of the pairs.
  bool passed() const { return verdict == ReachVerdict::certified || verdict == ReachVerdict::inconclusive_pass; }
  bool has_flag(const std::string& f) const;
  void add_flag(const std::string& f);
};

inline constexpr std::size_t kDefaultPairBudget = 20000;
inline constexpr std::uint64_t kDefaultSeed = 0xC0FFEE;

/// Foreground pixels inside the spindle of b1, b2, given in pixel indices
/// (pixel centers tested with half-diagonal slack). Report witnesses use
/// lattice coordinates.
BinaryMask lens_raster(const BinaryMask& m, Point2 b1, Point2 b2, RadiusPx r);

/// Number of 8-connected foreground components.
int count_components8(const BinaryMask& m);

ReachReport reach_ge_lens(const BinaryMask& m, RadiusPx r, std::size_t pair_budget = kDefaultPairBudget,
                          std::uint64_t seed = kDefaultSeed);

/// Largest R found by bisection over (0, diameter] at which reach_ge_lens passes.
double reach_lower_bound(const BinaryMask& m, std::size_t pair_budget = kDefaultPairBudget, int iters = 20,
                         std::uint64_t seed = kDefaultSeed);

/// Sampled N_R directions at foreground pixels of a mask. A direction v counts
/// as supporting at a when dist(a + Rv, A) ≥ R − slack_px.
class SupportSampler {
 public:
  SupportSampler(const BinaryMask& m, RadiusPx r, int count = 720, double slack_px = 1.0);

  ArcSet arcs(int x, int y) const;
  double pitch() const { return kTwoPi / count_; }
  /// Single arc no wider than a half circle, up to one sampling pitch.
  bool convex(const ArcSet& a) const;

 private:
  bool supports(Point2 c) const;

  const BinaryMask& m_;
  double r_;
  int count_;
  double slack_;
  SqDistField d2_;
  std::vector<Point2> edge_;
};

ReachReport certify_reach_d2(const PointSet2& e, double radius, const Tolerances& tol = {});
ReachReport certify_reach_d2(const BinaryMask& m, RadiusPx r, const Tolerances& tol = {});

/// Throws InputError when m is not a single 8-connected component or touches the window.
ReachReport walther_rolling_check(const BinaryMask& m, RadiusPx r, const Tolerances& tol = {},
                                  std::size_t pair_budget = kDefaultPairBudget);

/// Lattice version of cl(A^c): complement bits or boundary bits.
BinaryMask complement_closure(const BinaryMask& m);

}  // namespace rbody
