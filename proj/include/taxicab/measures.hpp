#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "taxicab/conic.hpp"
#include "taxicab/errors.hpp"
#include "taxicab/metric.hpp"
#include "taxicab/polygonize.hpp"

namespace taxicab {

struct Measure {
  double area = 0.0;
  double perimeter = 0.0;
  Metric perimeter_metric = Metric::taxicab();
};

/// Area and perimeter in an arbitrary number type, so the closed forms can
/// be evaluated exactly over rationals.
template <class T>
struct ExactMeasure {
  T area;
  T perimeter;
};

/// Foci (−1, 0), (1, 0), (0, 0): the only configuration with known
/// closed-form trifocal measures.
inline const std::array<Point, 3> kCanonicalTrifocalFoci{{{-1.0, 0.0}, {1.0, 0.0}, {0.0, 0.0}}};

/// Minimum focal sum of the canonical trifocal configuration.
inline constexpr int kCanonicalTrifocalFloor = 2;

bool is_canonical_trifocal(std::span<const Point> foci);

/// Taxicab circle closed form: area 4r², perimeter 8r.
template <class T>
ExactMeasure<T> circle_formula(const T& r) {
  if (!(r > T(0))) throw InvalidArgument("radius must be > 0");
  return {T(4) * r * r, T(8) * r};
}

/// Canonical trifocal ellipse closed form, piecewise in S with the S >= 3
/// branch taking the boundary.
template <class T>
ExactMeasure<T> trifocal_formula(const T& s) {
  if (s < T(kCanonicalTrifocalFloor)) throw EmptyRegion("trifocal region is empty for S < 2");
  if (!(s > T(kCanonicalTrifocalFloor))) {
    throw InvalidArgument("at S = 2 the trifocal curve degenerates to its Fermat point");
  }
  if (s < T(3)) {
    const T d = s - T(2);
    return {T(4) / T(3) * d * d, T(16) / T(3) * d};
  }
  return {T(4) / T(3) * (s * (s / T(3) - T(1)) + T(1)), T(8) / T(3) * (s - T(1))};
}

Measure circle_measures_closed_form(double r);

/// E.1 / E.2 / E.3 formulas with 2α = −γ − δ. Throws NoMeasure when
/// the configuration classifies as Empty.
Measure two_focus_measures_closed_form(const Point& f1, const Point& f2, double gamma);

/// Piecewise formulas for the canonical foci. Throws EmptyRegion for
/// S < 2 and InvalidArgument at the degenerate level S = 2.
Measure trifocal_measures_closed_form(double s);

struct FermatResult {
  DegenerateSet minimizing_set;
  double s0 = 0.0;
};

/// Minimizers of Σ d1(P, F_i): the product of the coordinatewise median
/// intervals, together with the minimum sum.
FermatResult fermat_point_taxicab(std::span<const Point> foci);

/// Lebesgue area and taxicab perimeter of the exact sum-ellipse polygon, or
/// of the minimizing box at S = S0. Throws EmptyRegion for S < S0.
Measure measures_oracle(std::span<const Point> foci, double s);

struct ReconciliationReport {
  Measure closed_form;
  Measure oracle;
  double area_abs_diff = 0.0;
  double perimeter_abs_diff = 0.0;
  bool area_agrees = false;
  bool perimeter_agrees = false;
};

inline constexpr double kReconcileTolerance = 1e-9;

ReconciliationReport reconcile(const Measure& formula, const Measure& oracle);

/// Pairs the closed form for the family with the polygon oracle. Defined
/// for circles, two-focus ellipses, and sum-ellipses on the canonical
/// trifocal foci; other specs throw NoMeasure.
ReconciliationReport reconcile(const ConicSpec& spec);

/// Reference Euclidean area and perimeter of the canonical trifocal ellipse,
/// available for S in {5/2, 3, 4}.
std::optional<Measure> reference_euclidean_trifocal(double s);

/// Closed-form measure for the spec when one exists, otherwise nullopt.
std::optional<Measure> closed_form_measures(const ConicSpec& spec);

}  // namespace taxicab
