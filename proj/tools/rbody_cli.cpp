// rbody: command-line front end for R-hulloids, R-bodies, R-cones and reach checks.
//
// Exit codes: 0 all checks pass, 1 refutation or witness found, 2 input error.

#include <algorithm>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "rbody/exact2d.hpp"
#include "rbody/fixtures.hpp"
#include "rbody/io.hpp"
#include "rbody/morph.hpp"
#include "rbody/rcone.hpp"
#include "rbody/reach.hpp"

namespace fs = std::filesystem;
using rbody::io::Json;
using namespace rbody;

namespace {

constexpr int kRasterSize = 256;

struct Options {
  std::vector<std::string> inputs;
  double radius = 0.0;
  std::string out;
  std::size_t samples = 0;
  std::uint64_t seed = kDefaultSeed;
  double band_px = Tolerances{}.band_px;
  std::string format = "pgm";
  std::string render = "none";
};

struct MaskInput {
  std::string name;
  BinaryMask mask;
  /// Radius converted to pixels, when a radius is known.
  std::optional<RadiusPx> radius_px;
  std::optional<io::PointSetFile> points;
};

bool is_mask_file(const fs::path& p) { return p.extension() == ".pgm"; }

double require_radius(const Options& o) {
  if (!(o.radius > 0.0)) throw InputError("radius must be positive (--radius)");
  return o.radius;
}

// Point sets become masks on a 256² window padded by 2R on every side.
BinaryMask rasterize(const std::vector<Point2>& pts, double radius, double& spacing) {
  Point2 lo = pts.front(), hi = pts.front();
  for (const Point2& p : pts) {
    lo = {std::min(lo.x, p.x), std::min(lo.y, p.y)};
    hi = {std::max(hi.x, p.x), std::max(hi.y, p.y)};
  }
  double extent = std::max(hi.x - lo.x, hi.y - lo.y) + 4.0 * radius;
  spacing = extent / double(kRasterSize - 1);
  Point2 mid = 0.5 * (lo + hi);
  Point2 origin = mid - Point2{0.5 * extent, 0.5 * extent};
  BinaryMask m(kRasterSize, kRasterSize, origin, spacing);
  for (const Point2& p : pts) {
    int x = int(std::lround((p.x - origin.x) / spacing));
    int y = int(std::lround((p.y - origin.y) / spacing));
    m.set(std::clamp(x, 0, kRasterSize - 1), std::clamp(y, 0, kRasterSize - 1));
  }
  return m;
}

std::vector<MaskInput> load_masks(const Options& o) {
  if (o.inputs.empty()) throw InputError("no input (--input)");
  std::vector<MaskInput> out;
  auto add_mask = [&](std::string name, BinaryMask m) {
    MaskInput in{std::move(name), std::move(m), std::nullopt, std::nullopt};
    if (o.radius > 0.0) in.radius_px = RadiusPx(o.radius / in.mask.spacing());
    out.push_back(std::move(in));
  };
  for (const std::string& s : o.inputs) {
    if (s == "corpus:blobs") {
      auto corpus = fixtures::standard_corpus();
      for (std::size_t i = 0; i < corpus.size(); ++i) add_mask("blob-" + std::to_string(i), std::move(corpus[i]));
      continue;
    }
    fs::path p(s);
    if (fs::is_directory(p)) {
      std::vector<fs::path> files;
      for (const auto& e : fs::directory_iterator(p)) {
        if (is_mask_file(e.path())) files.push_back(e.path());
      }
      std::sort(files.begin(), files.end());
      if (files.empty()) throw InputError("no .pgm masks in " + s);
      for (const auto& f : files) add_mask(f.filename().string(), io::read_mask(f));
    } else if (is_mask_file(p)) {
      add_mask(p.filename().string(), io::read_mask(p));
    } else {
      io::PointSetFile ps = io::read_point_set(p);
      double r = o.radius > 0.0 ? o.radius : ps.radius;
      double spacing = 1.0;
      BinaryMask m = rasterize(ps.points, r, spacing);
      MaskInput in{p.filename().string(), std::move(m), RadiusPx(r / spacing), std::move(ps)};
      out.push_back(std::move(in));
    }
  }
  for (const auto& in : out) {
    if (in.mask.empty()) throw InputError("empty body in " + in.name);
  }
  return out;
}

RadiusPx radius_of(const MaskInput& in) {
  if (!in.radius_px) throw InputError("radius must be positive (--radius)");
  return *in.radius_px;
}

Tolerances tolerances(const Options& o) {
  Tolerances t;
  t.band_px = o.band_px;
  t.validate();
  return t;
}

fs::path report_path(const Options& o, const std::string& command) {
  return o.out.empty() ? fs::path(command + ".json") : fs::path(o.out);
}

fs::path sibling(const fs::path& report, const std::string& suffix) {
  fs::path p = report;
  p.replace_extension();
  p += suffix;
  return p;
}

Json lattice_json(const BinaryMask& m) {
  return {{"width", m.width()}, {"height", m.height()}, {"origin", io::to_json(m.origin())}, {"spacing", m.spacing()}};
}

void render_layers(const Options& o, const fs::path& report, const BinaryMask& base,
                   const std::vector<std::pair<const BinaryMask*, io::Rgb>>& layers,
                   const std::vector<Point2>& marks = {}) {
  if (o.render == "none") return;
  io::RgbImage img(base.width(), base.height());
  img.paint(base, {40, 40, 40});
  for (const auto& [m, c] : layers) img.paint(*m, c);
  for (const Point2& p : marks) {
    int x = int(std::lround((p.x - base.origin().x) / base.spacing()));
    int y = int(std::lround((p.y - base.origin().y) / base.spacing()));
    for (int d = -2; d <= 2; ++d) {
      img.put(x + d, y, {30, 90, 220});
      img.put(x, y + d, {30, 90, 220});
    }
  }
  if (o.render == "png") {
    io::write_png(sibling(report, ".png"), img);
  } else {
    io::write_svg(sibling(report, ".svg"), img);
  }
}

int finish(const fs::path& path, Json report, bool pass) {
  report["pass"] = pass;
  io::write_report(path, report);
  return pass ? 0 : 1;
}

int cmd_hulloid(const Options& o) {
  auto ins = load_masks(o);
  fs::path rp = report_path(o, "hulloid");
  Json rep = io::make_report("hulloid");
  Json items = Json::array();
  for (std::size_t i = 0; i < ins.size(); ++i) {
    const MaskInput& in = ins[i];
    Hulloid co = hulloid(in.mask, radius_of(in));
    BinaryMask added = co.mask.minus(in.mask);
    Json item = {{"input", in.name},
                 {"radius_px", radius_of(in).value()},
                 {"lattice", lattice_json(in.mask)},
                 {"input_pixels", in.mask.count()},
                 {"hulloid_pixels", co.mask.count()},
                 {"added_pixels", added.count()},
                 {"full_fallback", co.full_fallback}};
    std::string suffix = ins.size() == 1 ? "" : "." + std::to_string(i);
    if (o.format == "pgm") {
      fs::path mp = sibling(rp, suffix + ".mask.pgm");
      io::write_mask(mp, co.mask);
      item["mask"] = mp.filename().string();
    }
    if (i == 0) render_layers(o, rp, in.mask, {{&added, {220, 60, 40}}});
    items.push_back(item);
  }
  rep["results"] = items;
  return finish(rp, rep, true);
}

int cmd_check_rbody(const Options& o) {
  auto ins = load_masks(o);
  fs::path rp = report_path(o, "check-rbody");
  Tolerances tol = tolerances(o);
  Json rep = io::make_report("check-rbody");
  Json items = Json::array();
  bool all = true;
  for (std::size_t i = 0; i < ins.size(); ++i) {
    RbodyCheck rc = is_rbody(ins[i].mask, radius_of(ins[i]), tol);
    Json item = io::to_json(rc.report);
    item["input"] = ins[i].name;
    item["is_rbody"] = rc.is_rbody;
    items.push_back(item);
    all = all && rc.is_rbody;
    if (i == 0 && o.render != "none") {
      BinaryMask added = hulloid(ins[i].mask, radius_of(ins[i])).mask.minus(ins[i].mask);
      std::vector<Point2> marks;
      for (const auto& w : rc.report.witnesses) marks.push_back(w.at);
      render_layers(o, rp, ins[i].mask, {{&added, {220, 60, 40}}}, marks);
    }
  }
  rep["results"] = items;
  return finish(rp, rep, all);
}

int cmd_identities(const Options& o) {
  auto ins = load_masks(o);
  fs::path rp = report_path(o, "identities");
  Tolerances tol = tolerances(o);
  Json rep = io::make_report("identities");
  Json items = Json::array();
  bool all = true;
  std::size_t out_of_band = 0;
  for (const MaskInput& in : ins) {
    CheckReport cr = identity_report(in.mask, radius_of(in), tol);
    Json item = io::to_json(cr);
    item["input"] = in.name;
    items.push_back(item);
    all = all && cr.pass;
    out_of_band += std::size_t(cr.stats["identity1.out_of_band"] + cr.stats["identity2.out_of_band"]);
  }
  rep["results"] = items;
  rep["total_out_of_band"] = out_of_band;
  return finish(rp, rep, all);
}

std::vector<Point2> parse_points(const std::vector<std::string>& specs) {
  std::vector<Point2> out;
  for (const std::string& s : specs) {
    std::istringstream ss(s);
    double x = 0.0, y = 0.0;
    char comma = 0;
    if (!(ss >> x >> comma >> y) || comma != ',') throw InputError("points are given as x,y: " + s);
    out.push_back({x, y});
  }
  return out;
}

int cmd_support(const Options& o, const std::vector<std::string>& at) {
  if (o.inputs.size() != 1) throw InputError("support takes one input");
  fs::path in(o.inputs.front());
  fs::path rp = report_path(o, "support");
  Tolerances tol = tolerances(o);
  Json rep = io::make_report("support");
  Json items = Json::array();
  std::vector<Point2> query = parse_points(at);
  bool all_nonempty = true;
  if (is_mask_file(in)) {
    BinaryMask m = io::read_mask(in);
    SupportSampler sampler(m, RadiusPx(require_radius(o) / m.spacing()), o.samples ? int(o.samples) : 720);
    if (query.empty()) throw InputError("mask input needs --at pixel positions");
    for (const Point2& q : query) {
      int x = int(std::lround(q.x));
      int y = int(std::lround(q.y));
      if (!m.get(x, y)) throw InputError("--at must name foreground pixels");
      ArcSet a = sampler.arcs(x, y);
      all_nonempty = all_nonempty && !a.is_empty();
      items.push_back({{"at", io::to_json(q)}, {"arcs", io::to_json(a)}, {"sph_convex", sampler.convex(a)}});
    }
  } else {
    io::PointSetFile ps = io::read_point_set(in);
    double r = o.radius > 0.0 ? o.radius : ps.radius;
    PointSet2 e(ps.points, tol);
    if (query.empty()) query = ps.points;
    for (const Point2& q : query) {
      if (!e.find(q, tol.eps_len)) throw InputError("--at must name points of the set");
      SupportArcs s = supporting_arcs(e, q, r, tol);
      all_nonempty = all_nonempty && !s.arcs.is_empty();
      items.push_back({{"at", io::to_json(q)},
                       {"arcs", io::to_json(s.arcs)},
                       {"sph_convex", arcset_is_sph_convex(s.arcs, tol)}});
    }
  }
  rep["results"] = items;
  return finish(rp, rep, all_nonempty);
}

int cmd_rcone(const Options& o) {
  if (o.inputs.size() != 1) throw InputError("rcone takes one cone file");
  Tolerances tol = tolerances(o);
  ConeSpec k = io::read_cone(o.inputs.front(), tol);
  if (o.radius > 0.0) k = ConeSpec(k.generators(), o.radius);
  fs::path rp = report_path(o, "rcone");
  Json rep = io::make_report("rcone");
  rep["radius"] = k.radius();
  rep["generators"] = io::to_json(k.generators());

  Sector2 tan = tangent_cone(k, tol);
  rep["tangent"] = {{"kind", to_string(tan.kind())}, {"directions", io::to_json(tan.directions())}};
  ArcSet nor = normal_arcs(k, tol);
  rep["normal"] = io::to_json(nor);

  std::size_t radial = o.samples ? o.samples : 64;
  CheckReport eq = cone_equivalence_sample(k, ConeSpec(nor, k.radius()), radial, tol);
  rep["equivalence"] = io::to_json(eq);
  rep["spherically_convex"] = arcset_is_sph_convex(k.generators(), tol);

  // Membership grid over [−3R, 3R]².
  constexpr int kGrid = 129;
  BinaryMask grid(kGrid, kGrid, {-3.0 * k.radius(), -3.0 * k.radius()}, 6.0 * k.radius() / (kGrid - 1));
  for (int y = 0; y < kGrid; ++y) {
    for (int x = 0; x < kGrid; ++x) {
      if (cone_contains(k, grid.lattice().center(x, y), tol)) grid.set(x, y);
    }
  }
  rep["membership_grid"] = {{"lattice", lattice_json(grid)}, {"inside", grid.count()}};
  if (o.format == "pgm") {
    fs::path mp = sibling(rp, ".mask.pgm");
    io::write_mask(mp, grid);
    rep["membership_grid"]["mask"] = mp.filename().string();
  }
  std::vector<Point2> marks;
  for (const auto& w : eq.witnesses) marks.push_back(w.at);
  render_layers(o, rp, grid, {}, marks);
  return finish(rp, rep, eq.pass);
}

int cmd_reach(const Options& o, const std::string& mode, std::size_t budget, int iters) {
  fs::path rp = report_path(o, "reach");
  Tolerances tol = tolerances(o);
  Json rep = io::make_report("reach");
  rep["mode"] = mode;
  bool pass = true;
  if (mode == "d2" && o.inputs.size() == 1 && !is_mask_file(o.inputs.front())) {
    io::PointSetFile ps = io::read_point_set(o.inputs.front());
    double r = o.radius > 0.0 ? o.radius : ps.radius;
    ReachReport rr = certify_reach_d2(PointSet2(ps.points, tol), r, tol);
    rep["results"] = Json::array({io::to_json(rr)});
    return finish(rp, rep, rr.passed());
  }
  auto ins = load_masks(o);
  Json items = Json::array();
  for (const MaskInput& in : ins) {
    Json item;
    if (mode == "lower-bound") {
      double lb = reach_lower_bound(in.mask, budget, iters, o.seed);
      item = {{"reach_lower_bound_px", std::isfinite(lb) ? Json(lb) : Json(nullptr)},
              {"reach_lower_bound", std::isfinite(lb) ? Json(lb * in.mask.spacing()) : Json(nullptr)}};
    } else {
      ReachReport rr;
      if (mode == "lens") {
        rr = reach_ge_lens(in.mask, radius_of(in), budget, o.seed);
      } else if (mode == "d2") {
        rr = certify_reach_d2(in.mask, radius_of(in), tol);
      } else if (mode == "walther") {
        rr = walther_rolling_check(in.mask, radius_of(in), tol, budget);
        pass = pass && !rr.has_flag("theorem-inconsistency");
      } else {
        throw InputError("unknown reach mode " + mode);
      }
      if (mode != "walther") pass = pass && rr.passed();
      item = io::to_json(rr);
    }
    item["input"] = in.name;
    items.push_back(item);
  }
  rep["results"] = items;
  return finish(rp, rep, pass);
}

int cmd_sweep(const Options& o, std::vector<double> radii) {
  auto ins = load_masks(o);
  if (ins.size() != 1) throw InputError("sweep takes one input");
  if (radii.empty()) throw InputError("no radii (--radii)");
  const MaskInput& in = ins.front();
  for (double& r : radii) r /= in.mask.spacing();
  fs::path rp = report_path(o, "sweep");
  Json rep = io::make_report("sweep");
  Json items = Json::array();
  bool nonincreasing = true;
  double prev = std::numeric_limits<double>::infinity();
  for (const SweepEntry& s : hulloid_sweep(in.mask, radii)) {
    items.push_back({{"radius_px", s.radius_px}, {"hausdorff", s.hausdorff}});
    nonincreasing = nonincreasing && s.hausdorff <= prev;
    prev = s.hausdorff;
  }
  rep["input"] = in.name;
  rep["results"] = items;
  rep["nonincreasing"] = nonincreasing;
  return finish(rp, rep, nonincreasing);
}

int cmd_render(const Options& o) {
  auto ins = load_masks(o);
  Options ro = o;
  if (ro.render == "none") ro.render = "png";
  fs::path rp = report_path(o, "render");
  const MaskInput& in = ins.front();
  Json rep = io::make_report("render");
  rep["input"] = in.name;
  rep["render"] = ro.render;
  if (in.radius_px) {
    BinaryMask added = hulloid(in.mask, *in.radius_px).mask.minus(in.mask);
    render_layers(ro, rp, in.mask, {{&added, {220, 60, 40}}});
  } else {
    render_layers(ro, rp, in.mask, {});
  }
  return finish(rp, rep, true);
}

int cmd_make_fixture(const Options& o, const std::string& name, int size) {
  if (o.out.empty()) throw InputError("make-fixture needs --out");
  const double r = require_radius(o);
  const Point2 c{0.5 * (size - 1), 0.5 * (size - 1)};
  auto write = [&](const fs::path& p, const BinaryMask& m) { io::write_mask(p, m); };
  if (name == "blobs") {
    fs::create_directories(o.out);
    auto corpus = fixtures::standard_corpus();
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "blob-%02zu.pgm", i);
      write(fs::path(o.out) / buf, corpus[i]);
    }
    return 0;
  }
  BinaryMask m;
  if (name == "disk") {
    m = fixtures::disk(size, size, c, r);
  } else if (name == "triangle") {
    m = fixtures::triangle_vertices(size, size, c, 0.9 * r);
  } else if (name == "square-outline") {
    m = fixtures::square_outline(size, size, c, 0.8 * r);
  } else if (name == "stadium") {
    m = fixtures::stadium(size, size, c, 2.0 * r, 1.2 * r);
  } else if (name == "dumbbell") {
    m = fixtures::dumbbell(2 * size, size, {0.5 * size - 0.5, c.y}, {1.5 * size - 0.5, c.y}, 2.0 * r, 0.2 * r);
  } else if (name == "two-points") {
    int half = int(std::lround(0.4 * r));
    m = fixtures::pixels(size, size, {{int(c.x) - half, int(c.y)}, {int(c.x) + half, int(c.y)}});
  } else {
    throw InputError("unknown fixture " + name);
  }
  write(o.out, m);
  return 0;
}

void add_common(CLI::App* sub, Options& o, bool needs_radius) {
  sub->add_option("-i,--input", o.inputs, "mask (.pgm), point set / cone (.json), directory, or corpus:blobs")
      ->required();
  auto* r = sub->add_option("-r,--radius", o.radius, "radius R in lattice units");
  if (needs_radius) r->check(CLI::PositiveNumber);
  sub->add_option("-o,--out", o.out, "report path (JSON)");
  sub->add_option("--samples", o.samples, "sample count");
  sub->add_option("--seed", o.seed, "random seed");
  sub->add_option("--band-px", o.band_px, "grid agreement band in pixels");
  sub->add_option("--format", o.format, "mask output format")->check(CLI::IsMember({"pgm", "json"}));
  sub->add_option("--render", o.render, "rendering")->check(CLI::IsMember({"svg", "png", "none"}));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"R-hulloids, R-bodies, R-cones and reach certification"};
  app.require_subcommand(1);
  Options o;

  auto* hul = app.add_subcommand("hulloid", "R-hulloid of a mask or point set");
  add_common(hul, o, true);
  auto* chk = app.add_subcommand("check-rbody", "test whether co_R(A) = A");
  add_common(chk, o, true);
  auto* ids = app.add_subcommand("identities", "check the hulloid set identities");
  add_common(ids, o, true);
  std::vector<std::string> at;
  auto* sup = app.add_subcommand("support", "R-supporting direction arcs at given points");
  add_common(sup, o, false);
  sup->add_option("--at", at, "query points x,y");
  auto* cone = app.add_subcommand("rcone", "R-cone membership, tangent and normal cones, equivalence");
  add_common(cone, o, false);
  std::string mode = "lens";
  std::size_t budget = kDefaultPairBudget;
  int iters = 20;
  auto* rch = app.add_subcommand("reach", "reach >= R certification");
  add_common(rch, o, false);
  rch->add_option("--mode", mode, "lens | lower-bound | d2 | walther")
      ->check(CLI::IsMember({"lens", "lower-bound", "d2", "walther"}));
  rch->add_option("--pair-budget", budget, "maximum lens pairs");
  rch->add_option("--iters", iters, "bisection iterations");
  std::vector<double> radii;
  auto* swp = app.add_subcommand("sweep", "Hausdorff distance to the convex hull over increasing radii");
  add_common(swp, o, false);
  swp->add_option("--radii", radii, "increasing radii in lattice units");
  auto* ren = app.add_subcommand("render", "render a mask, with hulloid additions when --radius is given");
  add_common(ren, o, false);
  std::string fixture;
  int size = 256;
  auto* fix = app.add_subcommand("make-fixture", "write a bundled fixture mask");
  fix->add_option("name", fixture, "disk | triangle | square-outline | stadium | dumbbell | two-points | blobs")
      ->required();
  fix->add_option("-r,--radius", o.radius, "radius R in pixels")->required();
  fix->add_option("-o,--out", o.out, "output .pgm (directory for blobs)")->required();
  fix->add_option("--size", size, "window size")->check(CLI::Range(16, 4096));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*hul) return cmd_hulloid(o);
    if (*chk) return cmd_check_rbody(o);
    if (*ids) return cmd_identities(o);
    if (*sup) return cmd_support(o, at);
    if (*cone) return cmd_rcone(o);
    if (*rch) return cmd_reach(o, mode, budget, iters);
    if (*swp) return cmd_sweep(o, radii);
    if (*ren) return cmd_render(o);
    if (*fix) return cmd_make_fixture(o, fixture, size);
  } catch (const std::exception& e) {
    std::cerr << "rbody: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
