#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "taxicab/metric.hpp"

namespace taxicab {

/// Absolute width used by every equality predicate of the classifiers.
inline constexpr double kClassTolerance = 1e-9;

// ---------------------------------------------------------------------------
// General focus/directrix equation
// ---------------------------------------------------------------------------

/// Which reading of the "∓ αγ" term is evaluated. `PlusAlphaGamma` adds αγ,
/// which is the branch that reproduces the two-focus ellipse d1 + d2 + γ = 0
/// when α = 1.
enum class GammaBranch { PlusAlphaGamma, MinusAlphaGamma };

struct GeneralConicSpec {
  Point focus1;
  std::optional<Point> focus2;
  std::optional<Line> directrix;
  int alpha = 1;  // one of -1, 0, 1
  double eccentricity = 1.0;
  double gamma = 0.0;

  /// Throws InvalidArgument when the field combination is inconsistent.
  void validate() const;
  /// e (α² − 1) / max(|a|, |b|), or 0 without a directrix.
  double beta() const;
};

/// Left-hand side of the general taxicab conic equation at `p`.
double general_conic_residual(const GeneralConicSpec& spec, const Point& p,
                              GammaBranch branch = GammaBranch::PlusAlphaGamma);

// ---------------------------------------------------------------------------
// Curve families
// ---------------------------------------------------------------------------

struct Circle {
  Point center;
  double radius = 1.0;
};

struct TwoFociEllipse {
  Point focus1;
  Point focus2;
  double gamma = 0.0;
};

struct TwoFociHyperbola {
  Point focus1;
  Point focus2;
  double gamma = 0.0;
};

struct Parabola {
  Point focus;
  Line directrix;
  double eccentricity = 1.0;
};

/// Σ d1(P, F_i) = S. Three foci give the trifocal ellipse.
struct SumEllipse {
  std::vector<Point> foci;
  double sum = 0.0;
};

using ConicSpec = std::variant<Circle, TwoFociEllipse, TwoFociHyperbola, Parabola, SumEllipse>;

/// Throws InvalidArgument when a per-family constraint is violated.
void validate(const ConicSpec& spec);

/// Signed residual whose zero set is the curve. For the closed families
/// (circle, ellipse, sum-ellipse) it is negative strictly inside.
/// The hyperbola folds both branches: |d1 − d2| + γ.
double residual(const ConicSpec& spec, const Point& p);

/// Foci of the spec (center for a circle, the focus for a parabola).
std::vector<Point> foci_of(const ConicSpec& spec);

/// Short family tag: "circle", "ellipse", "hyperbola", "parabola", "sumellipse".
std::string family_name(const ConicSpec& spec);

// ---------------------------------------------------------------------------
// Classifiers
// ---------------------------------------------------------------------------

struct EllipseClass {
  enum class Kind { Hexagon, Octagon, DegenerateRectangle, Empty };
  Kind kind;
  double delta;

  /// True for variants the named regimes do not cover.
  bool extrapolated() const { return kind == Kind::Empty; }
};

struct HyperbolaClass {
  enum class Kind { RegionsWithTails, ParallelLines, TrueHyperbola, Degenerate };
  Kind kind;
  double eta;
  double delta;

  bool extrapolated() const { return kind == Kind::Degenerate; }
};

struct ParabolaClass {
  enum class Kind { P1, P2, P3, P4, P5, P6, Unclassified };
  Kind kind;
  double rho;  // |−a/b|; +inf for a vertical directrix

  bool extrapolated() const { return kind == Kind::Unclassified; }
};

EllipseClass classify_ellipse(const Point& f1, const Point& f2, double gamma);
HyperbolaClass classify_hyperbola(const Point& f1, const Point& f2, double gamma);
ParabolaClass classify_parabola(const Point& focus, const Line& directrix, double eccentricity);

std::string to_string(EllipseClass::Kind kind);
std::string to_string(HyperbolaClass::Kind kind);
std::string to_string(ParabolaClass::Kind kind);

/// The regime's defining predicate in readable form, for reports.
std::string predicate_text(EllipseClass::Kind kind);
std::string predicate_text(HyperbolaClass::Kind kind);
std::string predicate_text(ParabolaClass::Kind kind);

}  // namespace taxicab
