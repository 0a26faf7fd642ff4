#include "taxicab/conic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "taxicab/errors.hpp"

namespace taxicab {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

bool near(double a, double b) { return std::abs(a - b) <= kClassTolerance; }

void require_gamma(double gamma) {
  if (!std::isfinite(gamma)) throw InvalidArgument("gamma must be finite");
  if (gamma > 0.0) throw InvalidArgument("gamma must be <= 0");
}

double line_scale(const Line& l) { return std::max(std::abs(l.a), std::abs(l.b)); }

}  // namespace

void GeneralConicSpec::validate() const {
  require_finite(focus1, "focus1");
  if (alpha < -1 || alpha > 1) throw InvalidArgument("alpha must be -1, 0 or 1");
  if (alpha != 0 && !focus2) throw InvalidArgument("alpha != 0 requires a second focus");
  if (alpha == 0 && !directrix) throw InvalidArgument("alpha = 0 requires a directrix");
  if (focus2) require_finite(*focus2, "focus2");
  if (directrix) directrix->validate();
  if (!(eccentricity > 0.0) || !std::isfinite(eccentricity)) {
    throw InvalidArgument("eccentricity must be a finite positive real");
  }
  require_gamma(gamma);
}

double GeneralConicSpec::beta() const {
  if (!directrix) return 0.0;
  return eccentricity * (alpha * alpha - 1) / line_scale(*directrix);
}

double general_conic_residual(const GeneralConicSpec& spec, const Point& p, GammaBranch branch) {
  spec.validate();
  double value = taxicab_distance(p, spec.focus1);
  if (spec.focus2 && spec.alpha != 0) value += spec.alpha * taxicab_distance(p, *spec.focus2);
  if (spec.directrix) value += spec.beta() * std::abs(spec.directrix->evaluate(p));
  const double alpha_gamma = spec.alpha * spec.gamma;
  return branch == GammaBranch::PlusAlphaGamma ? value + alpha_gamma : value - alpha_gamma;
}

void validate(const ConicSpec& spec) {
  std::visit(Overloaded{
                 [](const Circle& c) {
                   require_finite(c.center, "center");
                   if (!(c.radius > 0.0) || !std::isfinite(c.radius)) {
                     throw InvalidArgument("radius must be a finite positive real");
                   }
                 },
                 [](const TwoFociEllipse& e) {
                   require_finite(e.focus1, "focus1");
                   require_finite(e.focus2, "focus2");
                   require_gamma(e.gamma);
                 },
                 [](const TwoFociHyperbola& h) {
                   require_finite(h.focus1, "focus1");
                   require_finite(h.focus2, "focus2");
                   require_gamma(h.gamma);
                 },
                 [](const Parabola& p) {
                   require_finite(p.focus, "focus");
                   p.directrix.validate();
                   if (!(p.eccentricity > 0.0) || !std::isfinite(p.eccentricity)) {
                     throw InvalidArgument("eccentricity must be a finite positive real");
                   }
                 },
                 [](const SumEllipse& s) {
                   if (s.foci.empty()) throw InvalidArgument("sum-ellipse needs at least one focus");
                   for (const auto& f : s.foci) require_finite(f, "focus");
                   if (!std::isfinite(s.sum)) throw InvalidArgument("focal sum must be finite");
                 },
             },
             spec);
}

double residual(const ConicSpec& spec, const Point& p) {
  return std::visit(
      Overloaded{
          [&](const Circle& c) { return taxicab_distance(p, c.center) - c.radius; },
          [&](const TwoFociEllipse& e) {
            return taxicab_distance(p, e.focus1) + taxicab_distance(p, e.focus2) + e.gamma;
          },
          [&](const TwoFociHyperbola& h) {
            return std::abs(taxicab_distance(p, h.focus1) - taxicab_distance(p, h.focus2)) + h.gamma;
          },
          [&](const Parabola& q) {
            return taxicab_distance(p, q.focus) -
                   q.eccentricity / line_scale(q.directrix) * std::abs(q.directrix.evaluate(p));
          },
          [&](const SumEllipse& s) {
            double total = 0.0;
            for (const auto& f : s.foci) total += taxicab_distance(p, f);
            return total - s.sum;
          },
      },
      spec);
}

std::vector<Point> foci_of(const ConicSpec& spec) {
  return std::visit(Overloaded{
                        [](const Circle& c) { return std::vector<Point>{c.center}; },
                        [](const TwoFociEllipse& e) { return std::vector<Point>{e.focus1, e.focus2}; },
                        [](const TwoFociHyperbola& h) { return std::vector<Point>{h.focus1, h.focus2}; },
                        [](const Parabola& q) { return std::vector<Point>{q.focus}; },
                        [](const SumEllipse& s) { return s.foci; },
                    },
                    spec);
}

std::string family_name(const ConicSpec& spec) {
  static const char* const names[] = {"circle", "ellipse", "hyperbola", "parabola", "sumellipse"};
  return names[spec.index()];
}

EllipseClass classify_ellipse(const Point& f1, const Point& f2, double gamma) {
  require_finite(f1, "focus1");
  require_finite(f2, "focus2");
  require_gamma(gamma);
  const double delta = taxicab_distance(f1, f2);
  const double level = -gamma;
  using K = EllipseClass::Kind;
  if (near(level, delta)) return {K::DegenerateRectangle, delta};
  if (level < delta) return {K::Empty, delta};
  const bool axis_aligned = near(f1.y, f2.y) || near(f1.x, f2.x);
  return {axis_aligned ? K::Hexagon : K::Octagon, delta};
}

HyperbolaClass classify_hyperbola(const Point& f1, const Point& f2, double gamma) {
  require_finite(f1, "focus1");
  require_finite(f2, "focus2");
  require_gamma(gamma);
  const double delta = taxicab_distance(f1, f2);
  const double eta = f1.x - f2.x - f1.y + f2.y;
  const double level = -gamma;
  using K = HyperbolaClass::Kind;
  // Named regimes take precedence over the extrapolated one; |eta| <= delta
  // always, so only the H.1 boundary can coincide with -gamma = delta.
  if (near(level, std::abs(eta))) return {K::RegionsWithTails, eta, delta};
  if (level >= delta - kClassTolerance) return {K::Degenerate, eta, delta};
  if (level < std::abs(eta)) return {K::ParallelLines, eta, delta};
  return {K::TrueHyperbola, eta, delta};
}

ParabolaClass classify_parabola(const Point& focus, const Line& directrix, double eccentricity) {
  require_finite(focus, "focus");
  directrix.validate();
  if (!(eccentricity > 0.0) || !std::isfinite(eccentricity)) {
    throw InvalidArgument("eccentricity must be a finite positive real");
  }
  const double rho = directrix.b == 0.0 ? std::numeric_limits<double>::infinity()
                                        : std::abs(directrix.a / directrix.b);
  const double e = eccentricity;
  using K = ParabolaClass::Kind;
  if (near(e, 1.0)) return {near(rho, 1.0) ? K::P6 : K::P5, rho};
  if (e < 1.0) return {K::P4, rho};
  if (std::isinf(rho)) return {K::P1, rho};
  if (near(e, rho)) return {K::P2, rho};
  if (e < rho) return {K::P1, rho};
  if (rho > 1.0 + kClassTolerance) return {K::P3, rho};
  return {K::Unclassified, rho};
}

std::string to_string(EllipseClass::Kind kind) {
  switch (kind) {
    case EllipseClass::Kind::Hexagon:
      return "hexagon";
    case EllipseClass::Kind::Octagon:
      return "octagon";
    case EllipseClass::Kind::DegenerateRectangle:
      return "degenerate_rectangle";
    case EllipseClass::Kind::Empty:
      return "empty";
  }
  return "unknown";
}

std::string to_string(HyperbolaClass::Kind kind) {
  switch (kind) {
    case HyperbolaClass::Kind::RegionsWithTails:
      return "regions_with_tails";
    case HyperbolaClass::Kind::ParallelLines:
      return "parallel_lines";
    case HyperbolaClass::Kind::TrueHyperbola:
      return "true_hyperbola";
    case HyperbolaClass::Kind::Degenerate:
      return "degenerate";
  }
  return "unknown";
}

std::string to_string(ParabolaClass::Kind kind) {
  switch (kind) {
    case ParabolaClass::Kind::P1:
      return "P1";
    case ParabolaClass::Kind::P2:
      return "P2";
    case ParabolaClass::Kind::P3:
      return "P3";
    case ParabolaClass::Kind::P4:
      return "P4";
    case ParabolaClass::Kind::P5:
      return "P5";
    case ParabolaClass::Kind::P6:
      return "P6";
    case ParabolaClass::Kind::Unclassified:
      return "unclassified";
  }
  return "unknown";
}

std::string predicate_text(EllipseClass::Kind kind) {
  switch (kind) {
    case EllipseClass::Kind::Hexagon:
      return "-gamma > delta and (y1 = y2 or x1 = x2)";
    case EllipseClass::Kind::Octagon:
      return "-gamma > delta and y1 != y2 and x1 != x2";
    case EllipseClass::Kind::DegenerateRectangle:
      return "-gamma = delta";
    case EllipseClass::Kind::Empty:
      return "-gamma < delta";
  }
  return "";
}

std::string predicate_text(HyperbolaClass::Kind kind) {
  switch (kind) {
    case HyperbolaClass::Kind::RegionsWithTails:
      return "-gamma = |eta|";
    case HyperbolaClass::Kind::ParallelLines:
      return "-gamma < delta and -gamma < |eta|";
    case HyperbolaClass::Kind::TrueHyperbola:
      return "|eta| < -gamma < delta";
    case HyperbolaClass::Kind::Degenerate:
      return "-gamma >= delta";
  }
  return "";
}

std::string predicate_text(ParabolaClass::Kind kind) {
  switch (kind) {
    case ParabolaClass::Kind::P1:
      return "1 < e < rho";
    case ParabolaClass::Kind::P2:
      return "1 < e = rho";
    case ParabolaClass::Kind::P3:
      return "1 < rho < e";
    case ParabolaClass::Kind::P4:
      return "0 < e < 1";
    case ParabolaClass::Kind::P5:
      return "e = 1 and rho != 1";
    case ParabolaClass::Kind::P6:
      return "e = 1 and rho = 1";
    case ParabolaClass::Kind::Unclassified:
      return "e > 1 and rho <= 1";
  }
  return "";
}

}  // namespace taxicab
