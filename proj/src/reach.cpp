#include "rbody/reach.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

namespace rbody {

const char* to_string(ReachVerdict v) {
  switch (v) {
    case ReachVerdict::certified:
      return "certified-ge-R";
    case ReachVerdict::inconclusive_pass:
      return "inconclusive-pass";
    case ReachVerdict::refuted:
      return "refuted";
    case ReachVerdict::inconclusive:
      return "inconclusive";
  }
  return "?";
}

const char* to_string(ReachMethod m) {
  switch (m) {
    case ReachMethod::lens:
      return "lens";
    case ReachMethod::d2_convexity:
      return "d2-convexity";
    case ReachMethod::walther:
      return "walther";
  }
  return "?";
}

bool ReachReport::has_flag(const std::string& f) const {
  return std::find(flags.begin(), flags.end(), f) != flags.end();
}

void ReachReport::add_flag(const std::string& f) {
  if (!has_flag(f)) flags.push_back(f);
}

namespace {

constexpr double kHalfDiagonal = 0.70710678118654752;

struct Window {
  int x0, y0, x1, y1;  // inclusive
  int w() const { return x1 - x0 + 1; }
  int h() const { return y1 - y0 + 1; }
};

Window lens_window(const BinaryMask& m, Point2 b1, Point2 b2) {
  Point2 mid = 0.5 * (b1 + b2);
  double half = 0.5 * dist(b1, b2) + 1.0;
  return {std::max(0, int(std::floor(mid.x - half))), std::max(0, int(std::floor(mid.y - half))),
          std::min(m.width() - 1, int(std::ceil(mid.x + half))),
          std::min(m.height() - 1, int(std::ceil(mid.y + half)))};
}

int components8(std::vector<std::uint8_t>& cells, int w, int h, std::vector<int>& stack) {
  int count = 0;
  for (int start = 0; start < w * h; ++start) {
    if (cells[start] != 1) continue;
    ++count;
    cells[start] = 2;
    stack.assign(1, start);
    while (!stack.empty()) {
      int i = stack.back();
      stack.pop_back();
      int x = i % w;
      int y = i / w;
      for (int dy = -1; dy <= 1; ++dy) {
        for (int dx = -1; dx <= 1; ++dx) {
          int nx = x + dx;
          int ny = y + dy;
          if (nx < 0 || ny < 0 || nx >= w || ny >= h) continue;
          int j = ny * w + nx;
          if (cells[j] == 1) {
            cells[j] = 2;
            stack.push_back(j);
          }
        }
      }
    }
  }
  return count;
}

struct LensScratch {
  std::vector<std::uint8_t> cells;
  std::vector<int> stack;
};

int lens_components(const BinaryMask& m, Point2 b1, Point2 b2, double r, LensScratch& s) {
  LensSpec lens(b1, b2, r);
  Window win = lens_window(m, b1, b2);
  s.cells.assign(std::size_t(win.w()) * std::size_t(win.h()), 0);
  for (int y = win.y0; y <= win.y1; ++y) {
    for (int x = win.x0; x <= win.x1; ++x) {
      if (m.at(x, y) && lens_contains(lens, {double(x), double(y)}, kHalfDiagonal)) {
        s.cells[std::size_t(y - win.y0) * win.w() + (x - win.x0)] = 1;
      }
    }
  }
  return components8(s.cells, win.w(), win.h(), s.stack);
}

struct Offset {
  int dx, dy;
};

// Half of the offsets with 0 < |o| < 2R, one per unordered pair.
std::vector<Offset> pair_offsets(double r) {
  std::vector<Offset> out;
  const double lim2 = 4.0 * r * r;
  const int k = int(std::ceil(2.0 * r));
  for (int dy = 0; dy <= k; ++dy) {
    for (int dx = -k; dx <= k; ++dx) {
      if (dy == 0 && dx <= 0) continue;
      if (double(dx * dx + dy * dy) < lim2) out.push_back({dx, dy});
    }
  }
  return out;
}

struct FgPixel {
  int x, y;
};

std::vector<FgPixel> foreground(const BinaryMask& m) {
  std::vector<FgPixel> out;
  for (int y = 0; y < m.height(); ++y) {
    for (int x = 0; x < m.width(); ++x) {
      if (m.at(x, y)) out.push_back({x, y});
    }
  }
  return out;
}

double lens_width(double d, double r) { return 2.0 * (r - std::sqrt(r * r - 0.25 * d * d)); }

}  // namespace

BinaryMask lens_raster(const BinaryMask& m, Point2 b1, Point2 b2, RadiusPx r) {
  LensSpec lens(b1, b2, r.value());
  BinaryMask out(m.lattice());
  Window win = lens_window(m, b1, b2);
  for (int y = win.y0; y <= win.y1; ++y) {
    for (int x = win.x0; x <= win.x1; ++x) {
      if (m.at(x, y) && lens_contains(lens, {double(x), double(y)}, kHalfDiagonal)) out.set(x, y);
    }
  }
  return out;
}

int count_components8(const BinaryMask& m) {
  std::vector<std::uint8_t> cells(m.bits());
  std::vector<int> stack;
  return components8(cells, m.width(), m.height(), stack);
}

ReachReport reach_ge_lens(const BinaryMask& m, RadiusPx r, std::size_t pair_budget, std::uint64_t seed) {
  if (m.empty()) throw InputError("empty body");
  if (pair_budget < 1) throw InputError("pair budget must be at least 1");
  ReachReport rep;
  rep.method = ReachMethod::lens;
  const double rv = r.value();
  const std::vector<Offset> offsets = pair_offsets(rv);
  const std::vector<FgPixel> fg = foreground(m);

  // cumulative pair counts per foreground pixel
  std::vector<std::uint64_t> cum(fg.size() + 1, 0);
  for (std::size_t i = 0; i < fg.size(); ++i) {
    std::uint64_t c = 0;
    for (const Offset& o : offsets) c += m.get(fg[i].x + o.dx, fg[i].y + o.dy) ? 1 : 0;
    cum[i + 1] = cum[i] + c;
  }
  const std::uint64_t total = cum.back();
  const bool exhaustive = total <= pair_budget;

  LensScratch scratch;
  std::size_t tested = 0;
  std::size_t skipped = 0;
  auto test_pair = [&](FgPixel a, FgPixel b) {
    Point2 b1{double(a.x), double(a.y)};
    Point2 b2{double(b.x), double(b.y)};
    if (lens_width(dist(b1, b2), rv) < 1.0) {
      ++skipped;
      return false;
    }
    ++tested;
    int comps = lens_components(m, b1, b2, rv, scratch);
    if (comps > 1) {
      rep.verdict = ReachVerdict::refuted;
      rep.pair = PairWitness{m.lattice().center(a.x, a.y), m.lattice().center(b.x, b.y), comps};
      return true;
    }
    return false;
  };

  bool refuted = false;
  if (exhaustive) {
    for (std::size_t i = 0; i < fg.size() && !refuted; ++i) {
      if (cum[i + 1] == cum[i]) continue;
      for (const Offset& o : offsets) {
        FgPixel b{fg[i].x + o.dx, fg[i].y + o.dy};
        if (m.get(b.x, b.y) && test_pair(fg[i], b)) {
          refuted = true;
          break;
        }
      }
    }
  } else {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint64_t> pick(0, total - 1);
    for (std::size_t n = 0; n < pair_budget && !refuted; ++n) {
      std::uint64_t k = pick(rng);
      std::size_t i = std::size_t(std::upper_bound(cum.begin(), cum.end(), k) - cum.begin()) - 1;
      std::uint64_t rank = k - cum[i];
      for (const Offset& o : offsets) {
        FgPixel b{fg[i].x + o.dx, fg[i].y + o.dy};
        if (!m.get(b.x, b.y)) continue;
        if (rank-- == 0) {
          refuted = test_pair(fg[i], b);
          break;
        }
      }
    }
  }

  rep.stats["pairs_total"] = double(total);
  rep.stats["pairs_tested"] = double(tested);
  rep.stats["pairs_subresolution"] = double(skipped);
  rep.stats["radius_px"] = rv;
  if (skipped > 0) rep.add_flag("sub-resolution lens");
  if (!refuted) {
    rep.verdict = exhaustive ? ReachVerdict::certified : ReachVerdict::inconclusive_pass;
    if (!exhaustive) rep.add_flag("sampled-pairs");
  }
  return rep;
}

double reach_lower_bound(const BinaryMask& m, std::size_t pair_budget, int iters, std::uint64_t seed) {
  if (m.empty()) throw InputError("empty body");
  int x0 = m.width(), y0 = m.height(), x1 = -1, y1 = -1;
  for (const FgPixel& p : foreground(m)) {
    x0 = std::min(x0, p.x);
    y0 = std::min(y0, p.y);
    x1 = std::max(x1, p.x);
    y1 = std::max(y1, p.y);
  }
  const double diameter = std::hypot(double(x1 - x0), double(y1 - y0));
  if (diameter == 0.0) return std::numeric_limits<double>::infinity();
  auto passes = [&](double r) { return reach_ge_lens(m, RadiusPx(r), pair_budget, seed).passed(); };
  if (passes(diameter)) return diameter;
  double lo = 0.0;
  double hi = diameter;
  for (int i = 0; i < iters; ++i) {
    double mid = 0.5 * (lo + hi);
    (passes(mid) ? lo : hi) = mid;
  }
  return lo;
}

SupportSampler::SupportSampler(const BinaryMask& m, RadiusPx r, int count, double slack_px)
    : m_(m), r_(r.value()), count_(count), slack_(slack_px) {
  if (count < 4) throw InputError("samples must be at least 4");
  if (!(slack_px >= 0.0) || r_ - slack_px <= 1.0) throw InputError("radius too small for sampled support");
  d2_ = sq_edt(m);
  BinaryMask edge = boundary(m);
  for (int y = 0; y < m.height(); ++y) {
    for (int x = 0; x < m.width(); ++x) {
      if (edge.at(x, y)) edge_.push_back({double(x), double(y)});
    }
  }
}

bool SupportSampler::supports(Point2 c) const {
  const double thr = r_ - slack_;
  int qx = std::clamp(int(std::lround(c.x)), 0, m_.width() - 1);
  int qy = std::clamp(int(std::lround(c.y)), 0, m_.height() - 1);
  double e = dist(c, {double(qx), double(qy)});
  double dq = std::sqrt(double(d2_.at(qx, qy)));
  if (dq - e >= thr) return true;
  if (dq + e < thr) return false;
  // The nearest foreground pixel of a point this far out is a boundary pixel.
  const double thr2 = thr * thr;
  for (const Point2& p : edge_) {
    Point2 d = c - p;
    if (dot(d, d) < thr2) return false;
  }
  return true;
}

ArcSet SupportSampler::arcs(int x, int y) const {
  std::vector<std::uint8_t> on(std::size_t(count_), 0);
  const double p = pitch();
  const Point2 a{double(x), double(y)};
  bool all = true;
  bool any = false;
  for (int k = 0; k < count_; ++k) {
    double phi = k * p;
    on[k] = supports(a + r_ * Point2{std::cos(phi), std::sin(phi)}) ? 1 : 0;
    all = all && on[k];
    any = any || on[k];
  }
  if (all) return ArcSet::full();
  if (!any) return {};
  int first_off = 0;
  while (on[first_off]) ++first_off;
  // Runs of supporting samples; starting at an unsupported sample keeps runs from wrapping.
  std::vector<Arc> runs;
  int i = 0;
  while (i < count_) {
    if (!on[(first_off + i) % count_]) {
      ++i;
      continue;
    }
    int len = 0;
    while (i + len < count_ && on[(first_off + i + len) % count_]) ++len;
    runs.push_back({(first_off + i + 0.5 * (len - 1)) * p, 0.5 * (len - 1) * p});
    i += len;
  }
  Tolerances tol;
  tol.eps_ang = 0.25 * p;
  return ArcSet::from_arcs(runs, tol);
}

bool SupportSampler::convex(const ArcSet& a) const {
  return a.size() == 1 && !a.is_full() && a.arcs().front().halfwidth <= 0.5 * kPi + 0.5 * pitch();
}

namespace {

// Nearest other point of e to a.
std::optional<Point2> nearest_other(const PointSet2& e, Point2 a) {
  std::optional<Point2> best;
  double bd = std::numeric_limits<double>::infinity();
  for (const Point2& b : e) {
    double d = dist(a, b);
    if (d > 0.0 && d < bd) {
      bd = d;
      best = b;
    }
  }
  return best;
}

}  // namespace

ReachReport certify_reach_d2(const PointSet2& e, double radius, const Tolerances& tol) {
  if (!(radius > 0.0) || !std::isfinite(radius)) throw InputError("radius must be positive");
  ReachReport rep;
  rep.method = ReachMethod::d2_convexity;
  const auto& pts = e.points();

  // Probe set for co_R(E) = E.
  std::vector<Point2> probes;
  Point2 lo = pts.front(), hi = pts.front(), sum{};
  for (const Point2& p : pts) {
    lo = {std::min(lo.x, p.x), std::min(lo.y, p.y)};
    hi = {std::max(hi.x, p.x), std::max(hi.y, p.y)};
    sum = sum + p;
  }
  probes.push_back((1.0 / double(pts.size())) * sum);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      probes.push_back(0.5 * (pts[i] + pts[j]));
      for (std::size_t k = j + 1; k < pts.size(); ++k) {
        if (auto c = circumcenter(pts[i], pts[j], pts[k])) probes.push_back(*c);
      }
    }
  }
  constexpr int kGrid = 32;
  for (int iy = 0; iy <= kGrid; ++iy) {
    for (int ix = 0; ix <= kGrid; ++ix) {
      probes.push_back({lo.x + (hi.x - lo.x) * ix / kGrid, lo.y + (hi.y - lo.y) * iy / kGrid});
    }
  }
  std::size_t ambiguous = 0;
  std::optional<Point2> added;
  for (const Point2& y : probes) {
    if (e.find(y, tol.eps_len)) continue;
    MembershipResult mr = membership_corR(e, y, radius, tol);
    if (mr.verdict == Membership::ambiguous) ++ambiguous;
    if (mr.verdict == Membership::in) {
      added = y;
      break;
    }
  }
  rep.stats["probes"] = double(probes.size());
  rep.stats["probes_ambiguous"] = double(ambiguous);
  if (ambiguous > 0) rep.add_flag("boundary-ambiguous probes");

  ConvexityProfile prof = nr_convexity_profile(e, radius, tol);
  std::size_t nonconvex = 0;
  std::size_t isolated = 0;
  std::optional<Point2> bad;
  for (const ConvexityEntry& ent : prof.entries) {
    // No other point within 2R: the full circle supports and reach is unaffected.
    if (ent.arcs.is_full()) {
      ++isolated;
      continue;
    }
    if (!ent.sph_convex) {
      ++nonconvex;
      if (!bad) bad = ent.point;
    }
  }
  rep.stats["nonconvex_points"] = double(nonconvex);
  rep.stats["isolated_points"] = double(isolated);
  if (isolated > 0) rep.add_flag("isolated-points");
  rep.stats["radius"] = radius;

  if (!added && !bad) {
    rep.verdict = ReachVerdict::certified;
    return rep;
  }
  rep.verdict = ReachVerdict::refuted;
  if (added) rep.add_flag("not an R-body");
  if (bad) rep.add_flag("non-convex N_R");
  Point2 w = added ? *added : *bad;
  rep.point = w;
  // Attach the closest pair around the witness when it is admissible.
  Point2 a = pts.front();
  double best = std::numeric_limits<double>::infinity();
  for (const Point2& p : pts) {
    if (dist(p, w) < best) {
      best = dist(p, w);
      a = p;
    }
  }
  if (auto b = nearest_other(e, a); b && dist(a, *b) < 2.0 * radius) rep.pair = PairWitness{a, *b, 0};
  return rep;
}

ReachReport certify_reach_d2(const BinaryMask& m, RadiusPx r, const Tolerances& tol) {
  if (m.empty()) throw InputError("empty body");
  ReachReport rep;
  rep.method = ReachMethod::d2_convexity;
  RbodyCheck rb = is_rbody(m, r, tol);
  rep.stats["rbody_out_of_band"] = rb.report.stats["out_of_band"];
  rep.stats["radius_px"] = r.value();
  if (!rb.is_rbody) {
    rep.verdict = ReachVerdict::refuted;
    rep.add_flag("not an R-body");
    if (!rb.report.witnesses.empty()) rep.point = rb.report.witnesses.front().at;
    return rep;
  }
  SupportSampler sampler(m, r);
  BinaryMask edge = boundary(m);
  std::size_t checked = 0;
  std::size_t nonconvex = 0;
  for (int y = 0; y < m.height(); ++y) {
    for (int x = 0; x < m.width(); ++x) {
      if (!edge.at(x, y)) continue;
      ++checked;
      if (!sampler.convex(sampler.arcs(x, y))) {
        if (!rep.point) rep.point = m.lattice().center(x, y);
        ++nonconvex;
      }
    }
  }
  rep.stats["boundary_pixels"] = double(checked);
  rep.stats["nonconvex_pixels"] = double(nonconvex);
  if (nonconvex > 0) {
    rep.verdict = ReachVerdict::refuted;
    rep.add_flag("non-convex N_R");
  } else {
    rep.verdict = ReachVerdict::certified;
  }
  return rep;
}

BinaryMask complement_closure(const BinaryMask& m) { return m.complement() | boundary(m); }

ReachReport walther_rolling_check(const BinaryMask& m, RadiusPx r, const Tolerances& tol, std::size_t pair_budget) {
  if (m.empty()) throw InputError("empty body");
  if (count_components8(m) != 1) throw InputError("not connected");
  if (m.touches_window()) throw InputError("touches window");
  ReachReport rep;
  rep.method = ReachMethod::walther;
  RbodyCheck body = is_rbody(m, r, tol);
  RbodyCheck comp = is_rbody(complement_closure(m), r, tol);
  rep.stats["body_out_of_band"] = body.report.stats["out_of_band"];
  rep.stats["complement_out_of_band"] = comp.report.stats["out_of_band"];
  rep.stats["radius_px"] = r.value();
  if (!body.is_rbody || !comp.is_rbody) {
    rep.verdict = ReachVerdict::inconclusive;
    rep.add_flag("hypotheses-not-met");
    if (!body.is_rbody) rep.add_flag("body not an R-body");
    if (!comp.is_rbody) rep.add_flag("complement closure not an R-body");
    const RbodyCheck& failed = body.is_rbody ? comp : body;
    if (!failed.report.witnesses.empty()) rep.point = failed.report.witnesses.front().at;
    return rep;
  }
  ReachReport lens = reach_ge_lens(m, r, pair_budget);
  rep.stats["lens_pairs_tested"] = lens.stats["pairs_tested"];
  for (const auto& f : lens.flags) rep.add_flag(f);
  rep.pair = lens.pair;
  if (lens.passed()) {
    rep.verdict = lens.verdict;
  } else {
    rep.verdict = ReachVerdict::refuted;
    rep.add_flag("theorem-inconsistency");
  }
  return rep;
}

}  // namespace rbody
