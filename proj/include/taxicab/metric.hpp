#pragma once

#include <string>

namespace taxicab {

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point&, const Point&) = default;
};

/// Throws InvalidArgument unless both coordinates are finite.
void require_finite(const Point& p, const char* what = "point");

/// Minkowski metric of order k >= 1; k = 1 is taxicab, k = 2 Euclidean.
class Metric {
 public:
  enum class Kind { Taxicab, Euclidean, Minkowski };

  static constexpr Metric taxicab() { return Metric(Kind::Taxicab, 1.0); }
  static constexpr Metric euclidean() { return Metric(Kind::Euclidean, 2.0); }
  /// Orders 1 and 2 collapse to the named kinds. Throws InvalidArgument for
  /// k < 1 or non-finite k.
  static Metric minkowski(double k);

  constexpr Kind kind() const { return kind_; }
  constexpr double order() const { return order_; }
  std::string name() const;

  friend bool operator==(const Metric&, const Metric&) = default;

 private:
  constexpr Metric(Kind kind, double order) : kind_(kind), order_(order) {}

  Kind kind_;
  double order_;
};

/// Parses "taxicab" / "euclidean" (also "l1", "l2", "manhattan").
Metric parse_metric(const std::string& name);

/// Line a*x + b*y + c = 0 with (a, b) != (0, 0).
struct Line {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;

  double evaluate(const Point& p) const { return a * p.x + b * p.y + c; }
  /// Throws InvalidArgument for (a, b) = (0, 0) or non-finite coefficients.
  void validate() const;

  friend bool operator==(const Line&, const Line&) = default;
};

/// |dx| + |dy|; the hot path used by every taxicab residual.
inline double taxicab_distance(const Point& a, const Point& b) {
  const double dx = a.x - b.x;
  const double dy = a.y - b.y;
  return (dx < 0 ? -dx : dx) + (dy < 0 ? -dy : dy);
}

/// (|dx|^k + |dy|^k)^(1/k).
double minkowski_distance(const Point& a, const Point& b, const Metric& m);

/// Taxicab distance from p to the line: |a x + b y + c| / max(|a|, |b|).
double point_line_distance_taxicab(const Point& p, const Line& l);

}  // namespace taxicab
