#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "taxicab/metric.hpp"

namespace taxicab {

/// Region {P : f(P) <= 0}. The sweep is only correct when every vertical
/// slice of the region is empty or a single closed interval, which the
/// caller asserts through `y_interval_property`.
struct ImplicitRegion {
  std::function<double(const Point&)> feasible;
  bool y_interval_property = true;
};

/// f(P) = Σ d_m(P, F_i) − S. Convex, so the y-interval property holds.
ImplicitRegion sum_ellipse_region(std::vector<Point> foci, double sum, const Metric& m);

inline constexpr double kDefaultScanStep = 0.01;
inline constexpr double kDefaultRootTolerance = 1e-10;
inline constexpr double kDefaultYBracket = 1e3;
inline constexpr int kMaxSearchIterations = 200;

struct ScanConfig {
  double start_x = 0.0;
  double end_x = 0.0;
  double step = kDefaultScanStep;
  Metric metric = Metric::taxicab();
  double root_tol = kDefaultRootTolerance;
  double y_bracket = kDefaultYBracket;

  void validate() const;
};

struct YExtremes {
  double min_y;
  double max_y;
};

struct ScanColumn {
  double x;
  double min_y;
  double max_y;
};

struct ScanResult {
  double area = 0.0;
  double perimeter = 0.0;
  int columns_hit = 0;
  int columns_empty = 0;
  std::vector<ScanColumn> columns;  // nonempty columns, left to right
};

/// Endpoints of the feasible slice at `x`, or nullopt when the column misses
/// the region. Throws BracketExceeded when the slice reaches ±bracket.
std::optional<YExtremes> find_y_extremes(const ImplicitRegion& region, double x, double bracket,
                                         double tol);

/// (Y1 − Y2) · step / 2.
double trapezoid_correction(double y1, double y2, double step);

/// Boundary length between consecutive column endpoints. Taxicab and
/// Euclidean only; other metrics throw UnsupportedMetric.
double column_distance(double y, double old_y, double step, const Metric& m);

/// Column sweep from start_x to end_x accumulating area and perimeter.
/// Leading empty columns are skipped; the opening and closing vertical
/// contributions are taken at the first and last nonempty columns.
/// Throws EmptyRegion when no column meets the region.
ScanResult scan_area_perimeter(const ImplicitRegion& region, const ScanConfig& cfg);

}  // namespace taxicab
