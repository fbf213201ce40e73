// Python bindings. Masks are 2-D numpy arrays indexed [y, x]; nonzero = foreground.

#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "rbody/exact2d.hpp"
#include "rbody/fixtures.hpp"
#include "rbody/io.hpp"
#include "rbody/morph.hpp"
#include "rbody/rcone.hpp"
#include "rbody/reach.hpp"

namespace py = pybind11;
using namespace rbody;
using io::Json;

namespace {

using MaskArray = py::array_t<std::uint8_t, py::array::c_style | py::array::forcecast>;

BinaryMask to_mask(const MaskArray& a) {
  if (a.ndim() != 2) throw InputError("mask must be a 2-D array");
  const int h = int(a.shape(0));
  const int w = int(a.shape(1));
  BinaryMask m(w, h);
  auto v = a.unchecked<2>();
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      if (v(y, x)) m.set(x, y);
    }
  }
  return m;
}

py::array_t<bool> from_mask(const BinaryMask& m) {
  py::array_t<bool> out({m.height(), m.width()});
  auto v = out.mutable_unchecked<2>();
  for (int y = 0; y < m.height(); ++y) {
    for (int x = 0; x < m.width(); ++x) v(y, x) = m.at(x, y);
  }
  return out;
}

py::object to_py(const Json& j) {
  switch (j.type()) {
    case Json::value_t::null:
      return py::none();
    case Json::value_t::boolean:
      return py::bool_(j.get<bool>());
    case Json::value_t::number_integer:
      return py::int_(j.get<std::int64_t>());
    case Json::value_t::number_unsigned:
      return py::int_(j.get<std::uint64_t>());
    case Json::value_t::number_float:
      return py::float_(j.get<double>());
    case Json::value_t::string:
      return py::str(j.get<std::string>());
    case Json::value_t::array: {
      py::list l;
      for (const Json& e : j) l.append(to_py(e));
      return std::move(l);
    }
    case Json::value_t::object: {
      py::dict d;
      for (const auto& [k, v] : j.items()) d[py::str(k)] = to_py(v);
      return std::move(d);
    }
    default:
      return py::none();
  }
}

std::vector<Point2> to_points(const std::vector<std::pair<double, double>>& pts) {
  std::vector<Point2> out;
  out.reserve(pts.size());
  for (auto [x, y] : pts) out.push_back({x, y});
  return out;
}

Point2 pt(std::pair<double, double> p) { return {p.first, p.second}; }
std::pair<double, double> tup(Point2 p) { return {p.x, p.y}; }

Tolerances tol_with_band(double band_px) {
  Tolerances t;
  t.band_px = band_px;
  t.validate();
  return t;
}

ConeSpec make_cone(py::object angles, py::object arc, double radius) {
  if (!angles.is_none()) {
    auto a = angles.cast<std::vector<double>>();
    return ConeSpec::from_angles(a, radius);
  }
  if (!arc.is_none()) {
    auto a = arc.cast<std::pair<double, double>>();
    return ConeSpec::from_arc(a.first, a.second, radius);
  }
  throw InputError("give angles or arc");
}

}  // namespace

PYBIND11_MODULE(_rbody, m) {
  m.doc() = "R-hulloids, R-bodies, R-cones and reach certification";
  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);

  // grid morphology
  m.def("sq_edt", [](const MaskArray& a) {
    BinaryMask mk = to_mask(a);
    SqDistField d = sq_edt(mk);
    py::array_t<std::int64_t> out({mk.height(), mk.width()});
    std::copy(d.values().begin(), d.values().end(), out.mutable_data());
    return out;
  });
  m.def("dilate", [](const MaskArray& a, double r) { return from_mask(dilate(to_mask(a), RadiusPx(r))); });
  m.def("remote_set", [](const MaskArray& a, double r) { return from_mask(remote_set(to_mask(a), RadiusPx(r)).mask); });
  m.def("hulloid", [](const MaskArray& a, double r) { return from_mask(hulloid(to_mask(a), RadiusPx(r)).mask); },
        py::arg("mask"), py::arg("radius_px"));
  m.def("boundary", [](const MaskArray& a) { return from_mask(boundary(to_mask(a))); });
  m.def("convex_hull_mask", [](const MaskArray& a) { return from_mask(convex_hull_mask(to_mask(a))); });
  m.def("hausdorff", [](const MaskArray& a, const MaskArray& b) { return hausdorff(to_mask(a), to_mask(b)); });
  m.def(
      "is_rbody",
      [](const MaskArray& a, double r, double band_px) {
        RbodyCheck rc = is_rbody(to_mask(a), RadiusPx(r), tol_with_band(band_px));
        return to_py(io::to_json(rc.report));
      },
      py::arg("mask"), py::arg("radius_px"), py::arg("band_px") = Tolerances{}.band_px);
  m.def(
      "identity_report",
      [](const MaskArray& a, double r, double band_px) {
        return to_py(io::to_json(identity_report(to_mask(a), RadiusPx(r), tol_with_band(band_px))));
      },
      py::arg("mask"), py::arg("radius_px"), py::arg("band_px") = Tolerances{}.band_px);
  m.def("hulloid_sweep", [](const MaskArray& a, const std::vector<double>& radii) {
    std::vector<std::pair<double, double>> out;
    for (const SweepEntry& s : hulloid_sweep(to_mask(a), radii)) out.emplace_back(s.radius_px, s.hausdorff);
    return out;
  });

  // exact planar point sets
  m.def("supporting_arcs", [](const std::vector<std::pair<double, double>>& pts, std::pair<double, double> a,
                              double radius) {
    PointSet2 e(to_points(pts));
    return to_py(io::to_json(supporting_arcs(e, pt(a), radius).arcs));
  });
  m.def("membership_corR", [](const std::vector<std::pair<double, double>>& pts, std::pair<double, double> y,
                              double radius) {
    MembershipResult r = membership_corR(PointSet2(to_points(pts)), pt(y), radius);
    return std::make_pair(std::string(to_string(r.verdict)), r.clearance);
  });
  m.def("membership_corR_cones", [](const std::vector<std::pair<double, double>>& pts,
                                    std::pair<double, double> y, double radius) {
    MembershipResult r = membership_corR_cones(PointSet2(to_points(pts)), pt(y), radius);
    return std::make_pair(std::string(to_string(r.verdict)), r.clearance);
  });
  m.def("lens_contains", [](std::pair<double, double> b1, std::pair<double, double> b2, double radius,
                            std::pair<double, double> x) { return lens_contains(LensSpec(pt(b1), pt(b2), radius), pt(x)); });

  // R-cones
  m.def(
      "cone_contains",
      [](std::pair<double, double> x, double radius, py::object angles, py::object arc) {
        return cone_contains(make_cone(angles, arc, radius), pt(x));
      },
      py::arg("x"), py::arg("radius"), py::arg("angles") = py::none(), py::arg("arc") = py::none());
  m.def(
      "tangent_cone",
      [](double radius, py::object angles, py::object arc) {
        Sector2 s = tangent_cone(make_cone(angles, arc, radius));
        return py::make_tuple(to_string(s.kind()), to_py(io::to_json(s.directions())));
      },
      py::arg("radius"), py::arg("angles") = py::none(), py::arg("arc") = py::none());
  m.def(
      "normal_arcs",
      [](double radius, py::object angles, py::object arc) {
        return to_py(io::to_json(normal_arcs(make_cone(angles, arc, radius))));
      },
      py::arg("radius"), py::arg("angles") = py::none(), py::arg("arc") = py::none());
  m.def(
      "support_recovery_witness",
      [](double direction, double radius, std::size_t samples, py::object angles, py::object arc) {
        SupportWitness w = support_recovery_witness(make_cone(angles, arc, radius), UnitVec2(direction), samples);
        py::object at = w.witness ? py::cast(tup(*w.witness)) : py::none();
        return py::make_tuple(w.supports, at);
      },
      py::arg("direction"), py::arg("radius"), py::arg("samples") = 4096, py::arg("angles") = py::none(),
      py::arg("arc") = py::none());

  // reach
  m.def(
      "reach_ge_lens",
      [](const MaskArray& a, double r, std::size_t budget, std::uint64_t seed) {
        return to_py(io::to_json(reach_ge_lens(to_mask(a), RadiusPx(r), budget, seed)));
      },
      py::arg("mask"), py::arg("radius_px"), py::arg("pair_budget") = kDefaultPairBudget,
      py::arg("seed") = kDefaultSeed);
  m.def(
      "reach_lower_bound",
      [](const MaskArray& a, std::size_t budget, int iters, std::uint64_t seed) {
        return reach_lower_bound(to_mask(a), budget, iters, seed);
      },
      py::arg("mask"), py::arg("pair_budget") = kDefaultPairBudget, py::arg("iters") = 20,
      py::arg("seed") = kDefaultSeed);
  m.def("certify_reach_d2_points", [](const std::vector<std::pair<double, double>>& pts, double radius) {
    return to_py(io::to_json(certify_reach_d2(PointSet2(to_points(pts)), radius)));
  });
  m.def("certify_reach_d2_mask", [](const MaskArray& a, double r) {
    return to_py(io::to_json(certify_reach_d2(to_mask(a), RadiusPx(r))));
  });
  m.def("walther_rolling_check", [](const MaskArray& a, double r) {
    return to_py(io::to_json(walther_rolling_check(to_mask(a), RadiusPx(r))));
  });

  // files
  m.def("read_mask", [](const std::string& path) { return from_mask(io::read_mask(path)); });
  m.def("write_mask", [](const std::string& path, const MaskArray& a) { io::write_mask(path, to_mask(a)); });

  // fixtures
  auto f = m.def_submodule("fixtures", "deterministic test masks");
  f.def("disk", [](int w, int h, std::pair<double, double> c, double r) { return from_mask(fixtures::disk(w, h, pt(c), r)); });
  f.def("triangle_vertices", [](int w, int h, std::pair<double, double> c, double rc) {
    return from_mask(fixtures::triangle_vertices(w, h, pt(c), rc));
  });
  f.def("square_outline", [](int w, int h, std::pair<double, double> c, double rc) {
    return from_mask(fixtures::square_outline(w, h, pt(c), rc));
  });
  f.def("stadium", [](int w, int h, std::pair<double, double> c, double length, double cap) {
    return from_mask(fixtures::stadium(w, h, pt(c), length, cap));
  });
  f.def("blob", [](int w, int h, std::uint64_t seed, int margin) { return from_mask(fixtures::blob(w, h, seed, margin)); });
}
