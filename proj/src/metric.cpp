#include "taxicab/metric.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

#include "taxicab/errors.hpp"

namespace taxicab {

void require_finite(const Point& p, const char* what) {
  if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
    throw InvalidArgument(std::string(what) + " has a non-finite coordinate");
  }
}

Metric Metric::minkowski(double k) {
  if (!std::isfinite(k) || k < 1.0) {
    throw InvalidArgument("Minkowski order must be a finite real >= 1");
  }
  if (k == 1.0) return taxicab();
  if (k == 2.0) return euclidean();
  return Metric(Kind::Minkowski, k);
}

std::string Metric::name() const {
  switch (kind_) {
    case Kind::Taxicab:
      return "taxicab";
    case Kind::Euclidean:
      return "euclidean";
    case Kind::Minkowski:
      break;
  }
  return "minkowski";
}

Metric parse_metric(const std::string& name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "taxicab" || lower == "l1" || lower == "manhattan") return Metric::taxicab();
  if (lower == "euclidean" || lower == "l2") return Metric::euclidean();
  throw InvalidArgument("unknown metric '" + name + "'");
}

void Line::validate() const {
  if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(c)) {
    throw InvalidArgument("line has a non-finite coefficient");
  }
  if (a == 0.0 && b == 0.0) {
    throw InvalidArgument("line coefficients a and b are both zero");
  }
}

double minkowski_distance(const Point& a, const Point& b, const Metric& m) {
  require_finite(a);
  require_finite(b);
  const double dx = std::abs(a.x - b.x);
  const double dy = std::abs(a.y - b.y);
  switch (m.kind()) {
    case Metric::Kind::Taxicab:
      return dx + dy;
    case Metric::Kind::Euclidean:
      return std::hypot(dx, dy);
    case Metric::Kind::Minkowski:
      break;
  }
  // Factor out the larger component so the powers stay in range.
  const double big = std::max(dx, dy);
  if (big == 0.0) return 0.0;
  const double k = m.order();
  const double small = std::min(dx, dy) / big;
  return big * std::pow(1.0 + std::pow(small, k), 1.0 / k);
}

double point_line_distance_taxicab(const Point& p, const Line& l) {
  l.validate();
  require_finite(p);
  return std::abs(l.evaluate(p)) / std::max(std::abs(l.a), std::abs(l.b));
}

}  // namespace taxicab
