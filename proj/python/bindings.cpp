#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "taxicab/cli/command.hpp"
#include "taxicab/cli/render.hpp"
#include "taxicab/conic.hpp"
#include "taxicab/errors.hpp"
#include "taxicab/measures.hpp"
#include "taxicab/metric.hpp"
#include "taxicab/polygonize.hpp"
#include "taxicab/scan.hpp"

namespace py = pybind11;
using namespace taxicab;

namespace {

py::tuple xy(const Point& p) { return py::make_tuple(p.x, p.y); }

py::list points(const std::vector<Point>& ps) {
  py::list out;
  for (const auto& p : ps) out.append(xy(p));
  return out;
}

py::dict degenerate_dict(const DegenerateSet& d) {
  py::dict out;
  std::visit(
      [&](const auto& s) {
        using S = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<S, EmptySet>) {
          out["kind"] = "empty";
        } else if constexpr (std::is_same_v<S, SinglePoint>) {
          out["kind"] = "point";
          out["point"] = xy(s.point);
        } else if constexpr (std::is_same_v<S, Segment>) {
          out["kind"] = "segment";
          out["from"] = xy(s.from);
          out["to"] = xy(s.to);
        } else {
          out["kind"] = "rectangle";
          out["lo"] = xy(s.corner_lo);
          out["hi"] = xy(s.corner_hi);
        }
      },
      d);
  return out;
}

py::dict measure_dict(const Measure& m) {
  py::dict out;
  out["area"] = m.area;
  out["perimeter"] = m.perimeter;
  out["metric"] = m.perimeter_metric.name();
  return out;
}

Metric metric_arg(const py::object& m) {
  if (py::isinstance<py::str>(m)) return parse_metric(m.cast<std::string>());
  return Metric::minkowski(m.cast<double>());
}

std::optional<BoundingBox> bbox_arg(const std::optional<std::tuple<double, double, double, double>>& b) {
  if (!b) return std::nullopt;
  const auto [x0, y0, x1, y1] = *b;
  return BoundingBox{x0, y0, x1, y1};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Taxicab conics and multi-focal ellipses";

  auto error = py::register_exception<Error>(m, "TaxicabError", PyExc_RuntimeError);
  py::register_exception<InvalidArgument>(m, "InvalidArgument", error.ptr());
  py::register_exception<EmptyRegion>(m, "EmptyRegion", error.ptr());
  py::register_exception<NoMeasure>(m, "NoMeasure", error.ptr());
  py::register_exception<UnsupportedMetric>(m, "UnsupportedMetric", error.ptr());
  py::register_exception<BracketExceeded>(m, "BracketExceeded", error.ptr());

  py::class_<Point>(m, "Point")
      .def(py::init<double, double>(), py::arg("x"), py::arg("y"))
      .def(py::init([](const py::tuple& t) {
        if (t.size() != 2) throw InvalidArgument("a point needs two coordinates");
        return Point{t[0].cast<double>(), t[1].cast<double>()};
      }))
      .def_readwrite("x", &Point::x)
      .def_readwrite("y", &Point::y)
      .def("__iter__", [](const Point& p) { return py::iter(xy(p)); })
      .def("__eq__", [](const Point& a, const Point& b) { return a == b; })
      .def("__repr__", [](const Point& p) {
        return "Point(" + py::repr(py::float_(p.x)).cast<std::string>() + ", " +
               py::repr(py::float_(p.y)).cast<std::string>() + ")";
      });
  py::implicitly_convertible<py::tuple, Point>();

  py::class_<Line>(m, "Line")
      .def(py::init<double, double, double>(), py::arg("a"), py::arg("b"), py::arg("c"))
      .def(py::init([](const py::tuple& t) {
        if (t.size() != 3) throw InvalidArgument("a line needs three coefficients");
        return Line{t[0].cast<double>(), t[1].cast<double>(), t[2].cast<double>()};
      }))
      .def_readwrite("a", &Line::a)
      .def_readwrite("b", &Line::b)
      .def_readwrite("c", &Line::c);
  py::implicitly_convertible<py::tuple, Line>();

  py::class_<Circle>(m, "Circle")
      .def(py::init<Point, double>(), py::arg("center"), py::arg("radius"))
      .def_readwrite("center", &Circle::center)
      .def_readwrite("radius", &Circle::radius);
  py::class_<TwoFociEllipse>(m, "TwoFociEllipse")
      .def(py::init<Point, Point, double>(), py::arg("focus1"), py::arg("focus2"), py::arg("gamma"))
      .def_readwrite("focus1", &TwoFociEllipse::focus1)
      .def_readwrite("focus2", &TwoFociEllipse::focus2)
      .def_readwrite("gamma", &TwoFociEllipse::gamma);
  py::class_<TwoFociHyperbola>(m, "TwoFociHyperbola")
      .def(py::init<Point, Point, double>(), py::arg("focus1"), py::arg("focus2"), py::arg("gamma"))
      .def_readwrite("focus1", &TwoFociHyperbola::focus1)
      .def_readwrite("focus2", &TwoFociHyperbola::focus2)
      .def_readwrite("gamma", &TwoFociHyperbola::gamma);
  py::class_<Parabola>(m, "Parabola")
      .def(py::init<Point, Line, double>(), py::arg("focus"), py::arg("directrix"), py::arg("eccentricity"))
      .def_readwrite("focus", &Parabola::focus)
      .def_readwrite("directrix", &Parabola::directrix)
      .def_readwrite("eccentricity", &Parabola::eccentricity);
  py::class_<SumEllipse>(m, "SumEllipse")
      .def(py::init<std::vector<Point>, double>(), py::arg("foci"), py::arg("sum"))
      .def_readwrite("foci", &SumEllipse::foci)
      .def_readwrite("sum", &SumEllipse::sum);

  m.def("taxicab_distance", &taxicab_distance, py::arg("a"), py::arg("b"));
  m.def(
      "minkowski_distance",
      [](const Point& a, const Point& b, const py::object& metric) {
        return minkowski_distance(a, b, metric_arg(metric));
      },
      py::arg("a"), py::arg("b"), py::arg("metric") = 2.0,
      "Distance of order k; `metric` is a number k >= 1 or 'taxicab' / 'euclidean'.");
  m.def("point_line_distance", &point_line_distance_taxicab, py::arg("p"), py::arg("line"));

  m.def("residual", &residual, py::arg("spec"), py::arg("p"));

  m.def(
      "classify_ellipse",
      [](const Point& f1, const Point& f2, double gamma) {
        const auto c = classify_ellipse(f1, f2, gamma);
        py::dict out;
        out["class"] = to_string(c.kind);
        out["delta"] = c.delta;
        out["extrapolated"] = c.extrapolated();
        return out;
      },
      py::arg("focus1"), py::arg("focus2"), py::arg("gamma"));
  m.def(
      "classify_hyperbola",
      [](const Point& f1, const Point& f2, double gamma) {
        const auto c = classify_hyperbola(f1, f2, gamma);
        py::dict out;
        out["class"] = to_string(c.kind);
        out["eta"] = c.eta;
        out["delta"] = c.delta;
        out["extrapolated"] = c.extrapolated();
        return out;
      },
      py::arg("focus1"), py::arg("focus2"), py::arg("gamma"));
  m.def(
      "classify_parabola",
      [](const Point& focus, const Line& directrix, double e) {
        const auto c = classify_parabola(focus, directrix, e);
        py::dict out;
        out["class"] = to_string(c.kind);
        out["rho"] = c.rho;
        out["extrapolated"] = c.extrapolated();
        return out;
      },
      py::arg("focus"), py::arg("directrix"), py::arg("eccentricity"));

  m.def(
      "sum_ellipse_polygon",
      [](const std::vector<Point>& foci, double sum) -> py::dict {
        const auto shape = sum_ellipse_polygon(foci, sum);
        if (const auto* p = std::get_if<Polygon>(&shape)) {
          py::dict out;
          out["kind"] = "polygon";
          out["vertices"] = points(p->vertices);
          return out;
        }
        return degenerate_dict(std::get<DegenerateSet>(shape));
      },
      py::arg("foci"), py::arg("sum"));
  m.def(
      "contour",
      [](const ConicSpec& spec, std::tuple<double, double, double, double> bbox, int resolution) {
        py::list out;
        for (const auto& c : contour_sample(spec, *bbox_arg(bbox), resolution)) {
          py::dict chain;
          chain["closed"] = c.closed;
          chain["vertices"] = points(c.vertices);
          out.append(chain);
        }
        return out;
      },
      py::arg("spec"), py::arg("bbox"), py::arg("resolution") = 200);

  m.def(
      "fermat_point",
      [](const std::vector<Point>& foci) {
        const auto r = fermat_point_taxicab(foci);
        py::dict out;
        out["s0"] = r.s0;
        out["minimizing_set"] = degenerate_dict(r.minimizing_set);
        return out;
      },
      py::arg("foci"));
  m.def(
      "measures_oracle", [](const std::vector<Point>& foci, double s) { return measure_dict(measures_oracle(foci, s)); },
      py::arg("foci"), py::arg("sum"));
  m.def(
      "closed_form_measures",
      [](const ConicSpec& spec) -> py::object {
        const auto pm = closed_form_measures(spec);
        if (!pm) return py::none();
        return measure_dict(*pm);
      },
      py::arg("spec"), "Closed-form measures for the spec, or None when there are none.");
  m.def(
      "reconcile",
      [](const ConicSpec& spec) {
        const auto r = reconcile(spec);
        py::dict out;
        out["closed_form"] = measure_dict(r.closed_form);
        out["oracle"] = measure_dict(r.oracle);
        out["area_abs_diff"] = r.area_abs_diff;
        out["perimeter_abs_diff"] = r.perimeter_abs_diff;
        out["area_agrees"] = r.area_agrees;
        out["perimeter_agrees"] = r.perimeter_agrees;
        return out;
      },
      py::arg("spec"));

  m.def(
      "scan",
      [](const std::vector<Point>& foci, double sum, double start_x, double end_x, double step,
         const py::object& metric) {
        ScanConfig cfg;
        cfg.start_x = start_x;
        cfg.end_x = end_x;
        cfg.step = step;
        cfg.metric = metric_arg(metric);
        ScanResult r;
        {
          py::gil_scoped_release release;
          r = scan_area_perimeter(sum_ellipse_region(foci, sum, cfg.metric), cfg);
        }
        py::list columns;
        for (const auto& c : r.columns) columns.append(py::make_tuple(c.x, c.min_y, c.max_y));
        py::dict out;
        out["area"] = r.area;
        out["perimeter"] = r.perimeter;
        out["columns_hit"] = r.columns_hit;
        out["columns_empty"] = r.columns_empty;
        out["columns"] = columns;
        return out;
      },
      py::arg("foci"), py::arg("sum"), py::arg("start_x"), py::arg("end_x"), py::arg("step") = kDefaultScanStep,
      py::arg("metric") = "taxicab");

  m.def(
      "render_svg",
      [](const ConicSpec& spec, std::optional<std::tuple<double, double, double, double>> bbox, int resolution) {
        return cli::render_svg(spec, bbox_arg(bbox), resolution);
      },
      py::arg("spec"), py::arg("bbox") = py::none(), py::arg("resolution") = 200);

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = cli::run_cli(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Runs the taxicurve command line in-process; returns (exit_code, stdout, stderr).");
}
