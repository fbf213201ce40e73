#include <cmath>
#include "rbody/morph.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>

namespace rbody {

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

SqDistField sq_edt(const BinaryMask& m) {
  const Lattice& lat = m.lattice();
  const int w = lat.width;
  const int h = lat.height;
  if (m.empty()) throw InputError("empty body");

  const std::int64_t inf = std::int64_t(w) + h + 1;
  // Column pass: distance to the nearest foreground pixel in the same column.
  std::vector<std::int64_t> g(lat.size());
  for (int x = 0; x < w; ++x) {
    g[lat.index(x, 0)] = m.at(x, 0) ? 0 : inf;
    for (int y = 1; y < h; ++y) {
      g[lat.index(x, y)] = m.at(x, y) ? 0 : std::min(inf, g[lat.index(x, y - 1)] + 1);
    }
    for (int y = h - 2; y >= 0; --y) {
      g[lat.index(x, y)] = std::min(g[lat.index(x, y)], g[lat.index(x, y + 1)] + 1);
    }
  }

  SqDistField out(lat);
  std::vector<int> s(w);
  std::vector<std::int64_t> t(w);
  for (int y = 0; y < h; ++y) {
    const std::int64_t* gy = &g[lat.index(0, y)];
    auto f = [&](std::int64_t x, int i) { return (x - i) * (x - i) + gy[i] * gy[i]; };
    auto sep = [&](int i, int u) {
      return floor_div(std::int64_t(u) * u - std::int64_t(i) * i + gy[u] * gy[u] - gy[i] * gy[i],
                       2 * std::int64_t(u - i));
    };
    int q = 0;
    s[0] = 0;
    t[0] = 0;
    for (int u = 1; u < w; ++u) {
      while (q >= 0 && f(t[q], s[q]) > f(t[q], u)) --q;
      if (q < 0) {
        q = 0;
        s[0] = u;
      } else {
        std::int64_t wpos = 1 + sep(s[q], u);
        if (wpos < w) {
          ++q;
          s[q] = u;
          t[q] = wpos;
        }
      }
    }
    for (int u = w - 1; u >= 0; --u) {
      out.ref(u, y) = f(u, s[q]);
      if (u == t[q]) --q;
    }
  }
  return out;
}

BinaryMask dilate(const BinaryMask& m, RadiusPx r) {
  SqDistField d = sq_edt(m);
  BinaryMask out(m.lattice());
  const double r2 = r.squared();
  auto& bits = out.bits();
  const auto& vals = d.values();
  for (std::size_t i = 0; i < vals.size(); ++i) bits[i] = double(vals[i]) < r2 ? 1 : 0;
  return out;
}

RemoteSet remote_set(const BinaryMask& m, RadiusPx r) {
  RemoteSet out{dilate(m, r).complement(), false};
  out.empty = out.mask.empty();
  return out;
}

Hulloid hulloid(const BinaryMask& m, RadiusPx r) {
  RemoteSet inner = remote_set(m, r);
  if (inner.empty) {
    BinaryMask all(m.lattice());
    std::fill(all.bits().begin(), all.bits().end(), std::uint8_t{1});
    return {std::move(all), true};
  }
  return {remote_set(inner.mask, r).mask, false};
}

BinaryMask boundary(const BinaryMask& m) {
  BinaryMask out(m.lattice());
  const int w = m.width();
  const int h = m.height();
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      if (!m.at(x, y)) continue;
      bool edge = x == 0 || y == 0 || x == w - 1 || y == h - 1;
      if (edge || !m.at(x - 1, y) || !m.at(x + 1, y) || !m.at(x, y - 1) || !m.at(x, y + 1)) {
        out.set(x, y);
      }
    }
  }
  return out;
}

namespace {

struct IPt {
  std::int64_t x, y;
  friend bool operator<(IPt a, IPt b) { return a.x != b.x ? a.x < b.x : a.y < b.y; }
  friend bool operator==(IPt a, IPt b) = default;
};

std::int64_t icross(IPt o, IPt a, IPt b) { return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x); }

// Andrew's monotone chain; returns CCW hull without collinear points.
std::vector<IPt> hull_of(std::vector<IPt> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return pts;
  std::vector<IPt> h(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && icross(h[k - 2], h[k - 1], p) <= 0) --k;
    h[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, lo = k + 1; i-- > 0;) {
    while (k >= lo && icross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  return h;
}

}  // namespace

BinaryMask convex_hull_mask(const BinaryMask& m) {
  std::vector<IPt> pts;
  for (int y = 0; y < m.height(); ++y) {
    for (int x = 0; x < m.width(); ++x) {
      if (m.at(x, y)) pts.push_back({x, y});
    }
  }
  if (pts.empty()) throw InputError("empty body");
  std::vector<IPt> h = hull_of(pts);
  BinaryMask out(m.lattice());
  std::int64_t x0 = h[0].x, x1 = h[0].x, y0 = h[0].y, y1 = h[0].y;
  for (const auto& p : h) {
    x0 = std::min(x0, p.x);
    x1 = std::max(x1, p.x);
    y0 = std::min(y0, p.y);
    y1 = std::max(y1, p.y);
  }
  for (std::int64_t y = y0; y <= y1; ++y) {
    for (std::int64_t x = x0; x <= x1; ++x) {
      IPt p{x, y};
      bool in = true;
      if (h.size() == 1) {
        in = p == h[0];
      } else if (h.size() == 2) {
        in = icross(h[0], h[1], p) == 0;  // bbox already restricts to the segment
      } else {
        for (std::size_t i = 0; i < h.size() && in; ++i) {
          in = icross(h[i], h[(i + 1) % h.size()], p) >= 0;
        }
      }
      if (in) out.set(int(x), int(y));
    }
  }
  return out;
}

double hausdorff(const BinaryMask& a, const BinaryMask& b) {
  if (!(a.lattice() == b.lattice())) throw InputError("inconsistent lattice headers");
  if (a.empty() || b.empty()) throw InputError("empty body");
  SqDistField da = sq_edt(a);
  SqDistField db = sq_edt(b);
  std::int64_t worst = 0;
  for (std::size_t i = 0; i < a.bits().size(); ++i) {
    if (a.bits()[i]) worst = std::max(worst, db.values()[i]);
    if (b.bits()[i]) worst = std::max(worst, da.values()[i]);
  }
  return std::sqrt(double(worst)) * a.spacing();
}

BandCheck band_check(const BinaryMask& diff, const BinaryMask& edges, double band_px) {
  BandCheck out;
  out.disagreements = diff.count();
  if (out.disagreements == 0) return out;
  const Lattice& lat = diff.lattice();
  if (edges.empty()) {
    out.out_of_band = out.disagreements;
    out.worst_px = std::numeric_limits<double>::infinity();
    return out;
  }
  SqDistField d = sq_edt(edges);
  const double band2 = band_px * band_px;
  std::int64_t worst = -1;
  for (int y = 0; y < lat.height; ++y) {
    for (int x = 0; x < lat.width; ++x) {
      if (!diff.at(x, y)) continue;
      std::int64_t v = d.at(x, y);
      if (double(v) > band2) ++out.out_of_band;
      if (v > worst) {
        worst = v;
        out.worst_at = lat.center(x, y);
      }
    }
  }
  out.worst_px = std::sqrt(double(worst));
  return out;
}

namespace {

void record(CheckReport& rep, const std::string& key, const BandCheck& bc) {
  rep.stats[key + ".symdiff"] = double(bc.disagreements);
  rep.stats[key + ".out_of_band"] = double(bc.out_of_band);
  rep.stats[key + ".worst_px"] = bc.worst_px;
  if (bc.out_of_band > 0) {
    rep.pass = false;
    if (bc.worst_at) rep.witnesses.push_back({key, *bc.worst_at});
  }
}

BinaryMask symdiff(const BinaryMask& a, const BinaryMask& b) { return a.minus(b) | b.minus(a); }

}  // namespace

CheckReport identity_report(const BinaryMask& m, RadiusPx r, const Tolerances& tol) {
  CheckReport rep;
  rep.check = "identities";
  Hulloid co = hulloid(m, r);
  BinaryMask e_r = dilate(m, r);
  BinaryMask d_er = boundary(e_r);
  RemoteSet rem_boundary = remote_set(d_er, r);
  RemoteSet rem_2r = remote_set(m, r.scaled(2.0));

  // co_R(E) = E_R ∩ (∂E_R)'_R
  BinaryMask rhs1 = e_r & rem_boundary.mask;
  BandCheck bc1 = band_check(symdiff(co.mask, rhs1), boundary(co.mask) | boundary(rhs1), tol.band_px);
  record(rep, "identity1", bc1);

  // (∂E_R)'_R = co_R(E) ∪ E'_{2R}
  BinaryMask rhs2 = co.mask | rem_2r.mask;
  BandCheck bc2 =
      band_check(symdiff(rem_boundary.mask, rhs2), boundary(rem_boundary.mask) | boundary(rhs2), tol.band_px);
  record(rep, "identity2", bc2);

  if (co.full_fallback) rep.add_flag("full-fallback");
  if (e_r.touches_window()) rep.add_flag("touches-window");
  rep.stats["radius_px"] = r.value();
  return rep;
}

RbodyCheck is_rbody(const BinaryMask& m, RadiusPx r, const Tolerances& tol) {
  RbodyCheck out;
  out.report.check = "check-rbody";
  Hulloid co = hulloid(m, r);
  BinaryMask added = co.mask.minus(m);
  BandCheck bc = band_check(added, boundary(m), tol.band_px);
  out.report.stats["added"] = double(bc.disagreements);
  out.report.stats["out_of_band"] = double(bc.out_of_band);
  out.report.stats["worst_px"] = bc.worst_px;
  out.report.stats["radius_px"] = r.value();
  if (bc.out_of_band > 0 && bc.worst_at) out.report.witnesses.push_back({"farthest-added", *bc.worst_at});
  if (co.full_fallback) out.report.add_flag("full-fallback");
  if (m.touches_window()) out.report.add_flag("touches-window");
  out.is_rbody = bc.out_of_band == 0;
  out.report.pass = out.is_rbody;
  return out;
}

bool has_interior(const BinaryMask& m) {
  for (int y = 1; y + 1 < m.height(); ++y) {
    for (int x = 1; x + 1 < m.width(); ++x) {
      bool all = true;
      for (int dy = -1; dy <= 1 && all; ++dy) {
        for (int dx = -1; dx <= 1 && all; ++dx) all = m.at(x + dx, y + dy);
      }
      if (all) return true;
    }
  }
  return false;
}

std::vector<SweepEntry> hulloid_sweep(const BinaryMask& m, const std::vector<double>& radii_px) {
  if (m.empty()) throw InputError("empty body");
  if (!has_interior(m)) throw InputError("interior required");
  for (std::size_t i = 1; i < radii_px.size(); ++i) {
    if (!(radii_px[i] > radii_px[i - 1])) throw InputError("radii must be increasing");
  }
  // Pad so that every avoiding ball center up to the largest radius fits in the window.
  const int pad = radii_px.empty() ? 0 : int(std::ceil(radii_px.back())) + 2;
  BinaryMask big(m.width() + 2 * pad, m.height() + 2 * pad, m.origin() - m.spacing() * Point2{double(pad), double(pad)},
                 m.spacing());
  for (int y = 0; y < m.height(); ++y)
    for (int x = 0; x < m.width(); ++x)
      if (m.at(x, y)) big.set(x + pad, y + pad);
  BinaryMask hull = convex_hull_mask(big);
  std::vector<SweepEntry> out;
  out.reserve(radii_px.size());
  for (double r : radii_px) {
    Hulloid co = hulloid(big, RadiusPx(r));
    out.push_back({r, hausdorff(co.mask, hull)});
  }
  return out;
}

}  // namespace rbody
