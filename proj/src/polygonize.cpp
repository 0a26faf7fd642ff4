#include "taxicab/polygonize.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "taxicab/errors.hpp"

namespace taxicab {
namespace {

double cross(const Point& o, const Point& a, const Point& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

bool same_vertex(const Point& a, const Point& b) {
  return std::abs(a.x - b.x) <= kVertexMergeTolerance && std::abs(a.y - b.y) <= kVertexMergeTolerance;
}

// Drops repeated vertices (cyclically) and vertices lying on the segment
// joining their neighbours.
std::vector<Point> canonical_ring(std::vector<Point> ring) {
  std::vector<Point> out;
  out.reserve(ring.size());
  for (const auto& p : ring) {
    if (out.empty() || !same_vertex(out.back(), p)) out.push_back(p);
  }
  while (out.size() > 1 && same_vertex(out.front(), out.back())) out.pop_back();

  bool changed = true;
  while (changed && out.size() > 3) {
    changed = false;
    for (std::size_t i = 0; i < out.size() && out.size() > 3; ++i) {
      const Point& prev = out[(i + out.size() - 1) % out.size()];
      const Point& next = out[(i + 1) % out.size()];
      // Height of out[i] above the chord prev-next.
      const double chord = std::hypot(next.x - prev.x, next.y - prev.y);
      const double mag = std::max({1.0, std::abs(out[i].x), std::abs(out[i].y)});
      if (std::abs(cross(prev, out[i], next)) <= kVertexMergeTolerance * mag * chord) {
        out.erase(out.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
        break;
      }
    }
  }
  return out;
}

}  // namespace

PiecewiseLinearConvex::PiecewiseLinearConvex(std::span<const double> coords) {
  if (coords.empty()) throw InvalidArgument("profile needs at least one coordinate");
  std::vector<double> sorted(coords.begin(), coords.end());
  for (double c : sorted) {
    if (!std::isfinite(c)) throw InvalidArgument("profile coordinate is not finite");
  }
  std::sort(sorted.begin(), sorted.end());
  n_ = static_cast<int>(sorted.size());

  breakpoints_ = sorted;
  breakpoints_.erase(std::unique(breakpoints_.begin(), breakpoints_.end()), breakpoints_.end());

  values_.reserve(breakpoints_.size());
  slope_right_.reserve(breakpoints_.size());
  for (double b : breakpoints_) {
    double v = 0.0;
    for (double c : sorted) v += std::abs(b - c);
    values_.push_back(v);
    const auto at_or_below = std::upper_bound(sorted.begin(), sorted.end(), b) - sorted.begin();
    slope_right_.push_back(2 * static_cast<int>(at_or_below) - n_);
  }

  min_lo_ = static_cast<std::size_t>(
      std::find_if(slope_right_.begin(), slope_right_.end(), [](int s) { return s >= 0; }) -
      slope_right_.begin());
  min_hi_ = static_cast<std::size_t>(
      std::find_if(slope_right_.begin(), slope_right_.end(), [](int s) { return s > 0; }) -
      slope_right_.begin());
}

double PiecewiseLinearConvex::operator()(double t) const {
  const auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), t);
  if (it == breakpoints_.begin()) return values_.front() + n_ * (breakpoints_.front() - t);
  const auto k = static_cast<std::size_t>(it - breakpoints_.begin()) - 1;
  return values_[k] + slope_right_[k] * (t - breakpoints_[k]);
}

PiecewiseLinearConvex abs_sum_profile(std::span<const double> coords) {
  return PiecewiseLinearConvex(coords);
}

std::optional<Interval> sublevel_interval(const PiecewiseLinearConvex& h, double level) {
  if (!(level >= h.minimum())) return std::nullopt;
  const auto& bp = h.breakpoints();
  const auto& val = h.values();
  const auto& slope = h.slopes_right();
  const double n = h.count();
  if (level == h.minimum()) return Interval{h.argmin_lo(), h.argmin_hi()};

  // Left end: the first breakpoint at or below the level, then back along the
  // piece that enters it.
  std::size_t k = 0;
  while (val[k] > level) ++k;
  double lo;
  if (k == 0) {
    lo = bp[0] - (level - val[0]) / n;
  } else {
    lo = bp[k] + (level - val[k]) / slope[k - 1];
    lo = std::max(lo, bp[k - 1]);
  }

  std::size_t m = bp.size() - 1;
  while (val[m] > level) --m;
  double hi;
  if (m + 1 == bp.size()) {
    hi = bp[m] + (level - val[m]) / n;
  } else {
    hi = bp[m] + (level - val[m]) / slope[m];
    hi = std::min(hi, bp[m + 1]);
  }
  return Interval{lo, hi};
}

DegenerateSet make_box(double x_lo, double x_hi, double y_lo, double y_hi) {
  const bool flat_x = x_hi - x_lo <= kVertexMergeTolerance;
  const bool flat_y = y_hi - y_lo <= kVertexMergeTolerance;
  if (flat_x && flat_y) return SinglePoint{{x_lo, y_lo}};
  if (flat_x || flat_y) return Segment{{x_lo, y_lo}, {flat_x ? x_lo : x_hi, flat_y ? y_lo : y_hi}};
  return Rectangle{{x_lo, y_lo}, {x_hi, y_hi}};
}

SumEllipseShape sum_ellipse_polygon(std::span<const Point> foci, double sum) {
  if (foci.empty()) throw InvalidArgument("sum-ellipse needs at least one focus");
  if (!std::isfinite(sum)) throw InvalidArgument("focal sum must be finite");
  std::vector<double> xs, ys;
  for (const auto& f : foci) {
    require_finite(f, "focus");
    xs.push_back(f.x);
    ys.push_back(f.y);
  }
  const PiecewiseLinearConvex g(xs);
  const PiecewiseLinearConvex h(ys);
  const double floor_level = g.minimum() + h.minimum();
  const double tol = 1e-12 * std::max(1.0, std::abs(sum));
  if (sum < floor_level - tol) return DegenerateSet{EmptySet{}};
  if (sum <= floor_level + tol) {
    return DegenerateSet{make_box(g.argmin_lo(), g.argmin_hi(), h.argmin_lo(), h.argmin_hi())};
  }

  const Interval span_x = *sublevel_interval(g, sum - h.minimum());
  std::vector<double> xs_cand{span_x.lo, span_x.hi};
  for (double b : g.breakpoints()) {
    if (b > span_x.lo && b < span_x.hi) xs_cand.push_back(b);
  }
  // Columns where the remaining budget S − g(x) hits a kink of h.
  for (double v : h.values()) {
    if (auto cut = sublevel_interval(g, sum - v)) {
      xs_cand.push_back(cut->lo);
      xs_cand.push_back(cut->hi);
    }
  }
  std::sort(xs_cand.begin(), xs_cand.end());
  std::vector<double> columns;
  for (double x : xs_cand) {
    x = std::clamp(x, span_x.lo, span_x.hi);
    if (columns.empty() || x - columns.back() > kVertexMergeTolerance) columns.push_back(x);
  }

  std::vector<Interval> slices;
  slices.reserve(columns.size());
  for (double x : columns) {
    const double budget = std::max(sum - g(x), h.minimum());
    slices.push_back(*sublevel_interval(h, budget));
  }

  std::vector<Point> ring;
  const std::size_t last = columns.size() - 1;
  ring.push_back({columns[last], slices[last].lo});
  for (std::size_t i = columns.size(); i-- > 0;) ring.push_back({columns[i], slices[i].hi});
  for (std::size_t i = 0; i < last; ++i) ring.push_back({columns[i], slices[i].lo});

  return Polygon{canonical_ring(std::move(ring)), true};
}

double shoelace_area(const Polygon& poly) {
  if (!poly.closed) throw InvalidArgument("shoelace area needs a closed polygon");
  if (poly.vertices.size() < 3) throw InvalidArgument("shoelace area needs at least 3 vertices");
  const Point& o = poly.vertices.front();
  double twice = 0.0;
  for (std::size_t i = 1; i + 1 < poly.vertices.size(); ++i) {
    twice += cross(o, poly.vertices[i], poly.vertices[i + 1]);
  }
  return std::abs(twice) / 2.0;
}

double polygon_perimeter(const Polygon& poly, const Metric& m) {
  const auto& v = poly.vertices;
  if (v.size() < 2) throw InvalidArgument("perimeter needs at least 2 vertices");
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < v.size(); ++i) total += minkowski_distance(v[i], v[i + 1], m);
  if (poly.closed) total += minkowski_distance(v.back(), v.front(), m);
  return total;
}

BoundingBox bounding_box(std::span<const Point> points) {
  if (points.empty()) throw InvalidArgument("bounding box of no points");
  BoundingBox box{points[0].x, points[0].y, points[0].x, points[0].y};
  for (const auto& p : points) {
    box.x0 = std::min(box.x0, p.x);
    box.y0 = std::min(box.y0, p.y);
    box.x1 = std::max(box.x1, p.x);
    box.y1 = std::max(box.y1, p.y);
  }
  return box;
}

}  // namespace taxicab
