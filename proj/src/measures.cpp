#include "taxicab/measures.hpp"

#include <cmath>
#include <variant>

namespace taxicab {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

Measure box_measure(double width, double height) {
  return {width * height, 2.0 * (width + height), Metric::taxicab()};
}

}  // namespace

bool is_canonical_trifocal(std::span<const Point> foci) {
  if (foci.size() != kCanonicalTrifocalFoci.size()) return false;
  std::vector<bool> used(foci.size(), false);
  for (const auto& target : kCanonicalTrifocalFoci) {
    bool found = false;
    for (std::size_t i = 0; i < foci.size() && !found; ++i) {
      if (!used[i] && foci[i] == target) used[i] = found = true;
    }
    if (!found) return false;
  }
  return true;
}

Measure circle_measures_closed_form(double r) {
  if (!std::isfinite(r)) throw InvalidArgument("radius must be finite");
  const auto m = circle_formula(r);
  return {m.area, m.perimeter, Metric::taxicab()};
}

Measure two_focus_measures_closed_form(const Point& f1, const Point& f2, double gamma) {
  const EllipseClass cls = classify_ellipse(f1, f2, gamma);
  const double dx = std::abs(f1.x - f2.x);
  const double dy = std::abs(f1.y - f2.y);
  const double two_alpha = -gamma - cls.delta;
  switch (cls.kind) {
    case EllipseClass::Kind::Hexagon:
      return {two_alpha * -gamma, 2.0 * (-gamma + two_alpha), Metric::taxicab()};
    case EllipseClass::Kind::Octagon:
      return {(dx + two_alpha) * (dy + two_alpha), 2.0 * (dx + two_alpha) + 2.0 * (dy + two_alpha),
              Metric::taxicab()};
    case EllipseClass::Kind::DegenerateRectangle:
      return {dx * dy, 2.0 * cls.delta, Metric::taxicab()};
    case EllipseClass::Kind::Empty:
      break;
  }
  throw NoMeasure("two-focus ellipse with -gamma < delta has no points");
}

Measure trifocal_measures_closed_form(double s) {
  if (!std::isfinite(s)) throw InvalidArgument("focal sum must be finite");
  const auto m = trifocal_formula(s);
  return {m.area, m.perimeter, Metric::taxicab()};
}

FermatResult fermat_point_taxicab(std::span<const Point> foci) {
  if (foci.empty()) throw InvalidArgument("Fermat point needs at least one focus");
  std::vector<double> xs, ys;
  for (const auto& f : foci) {
    require_finite(f, "focus");
    xs.push_back(f.x);
    ys.push_back(f.y);
  }
  const PiecewiseLinearConvex g(xs);
  const PiecewiseLinearConvex h(ys);
  return {make_box(g.argmin_lo(), g.argmin_hi(), h.argmin_lo(), h.argmin_hi()),
          g.minimum() + h.minimum()};
}

Measure measures_oracle(std::span<const Point> foci, double s) {
  const SumEllipseShape shape = sum_ellipse_polygon(foci, s);
  if (const auto* poly = std::get_if<Polygon>(&shape)) {
    return {shoelace_area(*poly), polygon_perimeter(*poly, Metric::taxicab()), Metric::taxicab()};
  }
  return std::visit(
      Overloaded{
          [](const EmptySet&) -> Measure { throw EmptyRegion("focal sum is below the minimum S0"); },
          [](const SinglePoint&) { return box_measure(0.0, 0.0); },
          [](const Segment& seg) {
            return box_measure(std::abs(seg.to.x - seg.from.x), std::abs(seg.to.y - seg.from.y));
          },
          [](const Rectangle& r) {
            return box_measure(r.corner_hi.x - r.corner_lo.x, r.corner_hi.y - r.corner_lo.y);
          },
      },
      std::get<DegenerateSet>(shape));
}

ReconciliationReport reconcile(const Measure& formula, const Measure& oracle) {
  ReconciliationReport report{formula, oracle};
  report.area_abs_diff = std::abs(formula.area - oracle.area);
  report.perimeter_abs_diff = std::abs(formula.perimeter - oracle.perimeter);
  report.area_agrees = report.area_abs_diff <= kReconcileTolerance;
  report.perimeter_agrees = report.perimeter_abs_diff <= kReconcileTolerance;
  return report;
}

std::optional<Measure> closed_form_measures(const ConicSpec& spec) {
  validate(spec);
  if (const auto* c = std::get_if<Circle>(&spec)) return circle_measures_closed_form(c->radius);
  if (const auto* e = std::get_if<TwoFociEllipse>(&spec)) {
    return two_focus_measures_closed_form(e->focus1, e->focus2, e->gamma);
  }
  if (const auto* s = std::get_if<SumEllipse>(&spec)) {
    if (is_canonical_trifocal(s->foci)) return trifocal_measures_closed_form(s->sum);
  }
  return std::nullopt;
}

std::optional<Measure> reference_euclidean_trifocal(double s) {
  if (s == 2.5) return Measure{0.5645, 2.7123, Metric::euclidean()};
  if (s == 3.0) return Measure{1.7758, 4.9603, Metric::euclidean()};
  if (s == 4.0) return Measure{4.4032, 7.5085, Metric::euclidean()};
  return std::nullopt;
}

ReconciliationReport reconcile(const ConicSpec& spec) {
  const auto formula = closed_form_measures(spec);
  if (!formula) throw NoMeasure("no closed form for a " + family_name(spec) + " with these parameters");
  const auto foci = foci_of(spec);
  double level = 0.0;
  if (const auto* c = std::get_if<Circle>(&spec)) level = c->radius;
  if (const auto* e = std::get_if<TwoFociEllipse>(&spec)) level = -e->gamma;
  if (const auto* s = std::get_if<SumEllipse>(&spec)) level = s->sum;
  return reconcile(*formula, measures_oracle(foci, level));
}

}  // namespace taxicab
