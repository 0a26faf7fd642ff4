#include "taxicab/scan.hpp"

#include <cmath>
#include <utility>

#include "taxicab/errors.hpp"

namespace taxicab {
namespace {

// Root of the chord through (lo, f_lo) and (hi, f_hi), kept inside the
// bracket. On a linear piece this lands on the exact crossing.
double shortest_in(double a, double b, double fallback) {
  if (a <= 0.0 && 0.0 <= b) return 0.0;
  int e = 0;
  std::frexp(fallback, &e);
  for (int bits = 0; bits <= 53; ++bits) {
    const double r = std::ldexp(std::round(std::ldexp(fallback, bits - e)), e - bits);
    if (a <= r && r <= b) return r;
  }
  return fallback;
}

template <class F>
double polish(const F& f, double lo, double hi, double fallback) {
  const double f_lo = f(lo);
  const double f_hi = f(hi);
  if (f_hi == f_lo) return fallback;
  double c = lo - f_lo * ((hi - lo) / (f_hi - f_lo));
  if (!(c >= lo && c <= hi)) return fallback;
  // The chord root can be a few ulps off; settle on the nearby value with
  // the smallest residual.
  double best = std::abs(f(c));
  double down = c, up = c;
  const double at = c;
  for (int k = 0; k < 4 && best > 0.0; ++k) {
    down = std::nextafter(down, lo);
    up = std::nextafter(up, hi);
    for (double cand : {down, up}) {
      const double r = std::abs(f(cand));
      if (r < best) {
        best = r;
        c = cand;
      }
    }
  }
  if (!(best < std::abs(f(at)))) c = at;
  // Rounding can flatten a few ulps around the root into exact zeros; take
  // the value in that plateau with the shortest binary mantissa.
  if (f(c) == 0.0) {
    double a = c, b = c;
    for (int k = 0; k < 8; ++k) {
      const double next = std::nextafter(a, lo);
      if (next < lo || f(next) != 0.0) break;
      a = next;
    }
    for (int k = 0; k < 8; ++k) {
      const double next = std::nextafter(b, hi);
      if (next > hi || f(next) != 0.0) break;
      b = next;
    }
    c = shortest_in(a, b, c);
  }
  return c;
}

}  // namespace

ImplicitRegion sum_ellipse_region(std::vector<Point> foci, double sum, const Metric& m) {
  if (foci.empty()) throw InvalidArgument("sum-ellipse needs at least one focus");
  for (const auto& f : foci) require_finite(f, "focus");
  if (!std::isfinite(sum)) throw InvalidArgument("focal sum must be finite");
  if (m.kind() == Metric::Kind::Taxicab) {
    return {[foci = std::move(foci), sum](const Point& p) {
      double total = 0.0;
      for (const auto& f : foci) total += taxicab_distance(p, f);
      return total - sum;
    }};
  }
  return {[foci = std::move(foci), sum, m](const Point& p) {
    double total = 0.0;
    for (const auto& f : foci) total += minkowski_distance(p, f, m);
    return total - sum;
  }};
}

void ScanConfig::validate() const {
  if (!std::isfinite(start_x) || !std::isfinite(end_x)) throw InvalidArgument("scan bounds must be finite");
  if (start_x > end_x) throw InvalidArgument("scan needs start_x <= end_x");
  if (!(step > 0.0) || !std::isfinite(step)) throw InvalidArgument("scan step must be > 0");
  if (!(root_tol > 0.0)) throw InvalidArgument("root tolerance must be > 0");
  if (!(y_bracket > 0.0) || !std::isfinite(y_bracket)) throw InvalidArgument("y bracket must be > 0");
}

std::optional<YExtremes> find_y_extremes(const ImplicitRegion& region, double x, double bracket,
                                         double tol) {
  const auto f = [&](double y) { return region.feasible({x, y}); };

  // Ternary search for a minimizer of the convex slice f(x, ·); stop as soon
  // as any probe is feasible.
  double lo = -bracket;
  double hi = bracket;
  std::optional<double> inside;
  for (int it = 0; it < kMaxSearchIterations && hi - lo > tol; ++it) {
    const double third = (hi - lo) / 3;
    const double m1 = lo + third;
    const double m2 = hi - third;
    const double f1 = f(m1);
    const double f2 = f(m2);
    if (f1 <= 0.0 || f2 <= 0.0) {
      inside = f1 <= f2 ? m1 : m2;
      break;
    }
    if (f1 < f2) {
      hi = m2;
    } else if (f1 > f2) {
      lo = m1;
    } else {
      lo = m1;
      hi = m2;
    }
  }
  if (!inside) {
    const double mid = (lo + hi) / 2;
    if (f(mid) > 0.0) return std::nullopt;
    inside = mid;
  }

  if (f(bracket) <= 0.0 || f(-bracket) <= 0.0) {
    throw BracketExceeded("region reaches the y search bracket at x = " + std::to_string(x));
  }

  // Bisection outward from the interior point. `in` stays feasible.
  auto boundary = [&](double in, double out) {
    for (int it = 0; it < kMaxSearchIterations && std::abs(out - in) > tol; ++it) {
      const double mid = (in + out) / 2;
      (f(mid) <= 0.0 ? in : out) = mid;
    }
    return polish(f, std::min(in, out), std::max(in, out), in);
  };
  return YExtremes{boundary(*inside, -bracket), boundary(*inside, bracket)};
}

double trapezoid_correction(double y1, double y2, double step) { return (y1 - y2) * step / 2; }

double column_distance(double y, double old_y, double step, const Metric& m) {
  switch (m.kind()) {
    case Metric::Kind::Taxicab:
      return std::abs(y - old_y) + std::abs(step);
    case Metric::Kind::Euclidean:
      return std::sqrt((y - old_y) * (y - old_y) + step * step);
    case Metric::Kind::Minkowski:
      break;
  }
  throw UnsupportedMetric("column distance is defined for the taxicab and Euclidean metrics only");
}

ScanResult scan_area_perimeter(const ImplicitRegion& region, const ScanConfig& cfg) {
  cfg.validate();
  if (!region.feasible) throw InvalidArgument("region has no feasibility function");
  if (!region.y_interval_property) {
    throw InvalidArgument("sweep requires every vertical slice to be a single interval");
  }
  // Probe the metric before sweeping so bad configs fail fast.
  column_distance(0.0, 0.0, cfg.step, cfg.metric);

  // Columns are placed at start + i * step rather than by repeated addition
  // so that end_x is reached without drift.
  const auto last_index = static_cast<long long>(std::floor((cfg.end_x - cfg.start_x) / cfg.step + 1e-9));

  ScanResult result;
  bool finished = false;
  double old_min = 0.0;
  double old_max = 0.0;
  for (long long i = 0; i <= last_index; ++i) {
    const double x = cfg.start_x + static_cast<double>(i) * cfg.step;
    const auto ext = find_y_extremes(region, x, cfg.y_bracket, cfg.root_tol);
    if (!ext) {
      ++result.columns_empty;
      finished = result.columns_hit > 0;
      continue;
    }
    if (finished) throw InvalidArgument("region is not connected along the sweep direction");
    const double min_y = ext->min_y;
    const double max_y = ext->max_y;
    if (result.columns_hit == 0) {
      result.perimeter += max_y - min_y;
    } else {
      result.perimeter += column_distance(max_y, old_max, cfg.step, cfg.metric) +
                          column_distance(min_y, old_min, cfg.step, cfg.metric);
      result.area += (max_y - min_y) * cfg.step + trapezoid_correction(max_y, old_max, cfg.step) +
                     trapezoid_correction(old_min, min_y, cfg.step);
    }
    old_min = min_y;
    old_max = max_y;
    ++result.columns_hit;
    result.columns.push_back({x, min_y, max_y});
  }
  if (result.columns_hit == 0) throw EmptyRegion("no scan column meets the region");
  result.perimeter += old_max - old_min;
  return result;
}

}  // namespace taxicab
