#pragma once

#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "taxicab/conic.hpp"
#include "taxicab/metric.hpp"

namespace taxicab {

/// Consecutive vertices closer than this are merged.
inline constexpr double kVertexMergeTolerance = 1e-12;

/// t ↦ Σ_i |t − c_i|, stored by its distinct breakpoints. Convex, with slope
/// −n left of the first breakpoint and +n right of the last.
class PiecewiseLinearConvex {
 public:
  /// Throws InvalidArgument for an empty or non-finite input.
  explicit PiecewiseLinearConvex(std::span<const double> coords);

  double operator()(double t) const;

  const std::vector<double>& breakpoints() const { return breakpoints_; }
  const std::vector<double>& values() const { return values_; }
  /// Slope of the piece starting at each breakpoint.
  const std::vector<int>& slopes_right() const { return slope_right_; }
  int count() const { return n_; }

  double minimum() const { return values_[min_lo_]; }
  /// Endpoints of the minimizing (median) interval.
  double argmin_lo() const { return breakpoints_[min_lo_]; }
  double argmin_hi() const { return breakpoints_[min_hi_]; }

 private:
  std::vector<double> breakpoints_;
  std::vector<double> values_;
  std::vector<int> slope_right_;
  int n_ = 0;
  std::size_t min_lo_ = 0;  // indices into breakpoints_
  std::size_t min_hi_ = 0;
};

PiecewiseLinearConvex abs_sum_profile(std::span<const double> coords);

struct Interval {
  double lo;
  double hi;
};

/// {t : h(t) <= level}, or nullopt when level < min h.
std::optional<Interval> sublevel_interval(const PiecewiseLinearConvex& h, double level);

struct Polygon {
  std::vector<Point> vertices;
  bool closed = true;
};

struct EmptySet {};
struct SinglePoint {
  Point point;
};
struct Segment {
  Point from;
  Point to;
};
struct Rectangle {
  Point corner_lo;
  Point corner_hi;
};
using DegenerateSet = std::variant<EmptySet, SinglePoint, Segment, Rectangle>;

/// Builds the degenerate set [x_lo, x_hi] × [y_lo, y_hi], collapsing to a
/// segment or point when a side has zero width.
DegenerateSet make_box(double x_lo, double x_hi, double y_lo, double y_hi);

using SumEllipseShape = std::variant<Polygon, DegenerateSet>;

/// Exact boundary of {P : Σ d1(P, F_i) <= S}. Above the minimum level the
/// result is a convex counterclockwise polygon starting at the lowest vertex
/// of the rightmost edge; at the minimum it is the minimizing box; below it
/// is EmptySet.
SumEllipseShape sum_ellipse_polygon(std::span<const Point> foci, double sum);

/// Surveyor's formula, orientation independent. Needs a closed polygon with
/// at least three vertices.
double shoelace_area(const Polygon& poly);

/// Sum of edge lengths under `m`, including the closing edge when closed.
double polygon_perimeter(const Polygon& poly, const Metric& m);

struct BoundingBox {
  double x0;
  double y0;
  double x1;
  double y1;

  double width() const { return x1 - x0; }
  double height() const { return y1 - y0; }
};

BoundingBox bounding_box(std::span<const Point> points);

/// Residual tolerance met by every point emitted by contour_sample.
inline constexpr double kContourTolerance = 1e-6;
inline constexpr int kContourMaxBisections = 60;

/// Zero-set chains of residual(spec, ·) traced by marching squares on a
/// resolution × resolution lattice of sample nodes covering `bbox`. Each
/// crossing is refined by bisection along its lattice edge. Chains are
/// returned as polylines; a chain that returns to its start is closed.
std::vector<Polygon> contour_sample(const ConicSpec& spec, const BoundingBox& bbox, int resolution);

}  // namespace taxicab
