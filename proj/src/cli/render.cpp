#include "taxicab/cli/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <variant>
#include <vector>

namespace taxicab::cli {
namespace {

std::string num(double v) {
  if (v == 0.0) v = 0.0;  // no "-0"
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

// Separable families as (foci, level).
std::optional<std::pair<std::vector<Point>, double>> as_sum_ellipse(const ConicSpec& spec) {
  if (const auto* c = std::get_if<Circle>(&spec)) return std::pair{std::vector<Point>{c->center}, c->radius};
  if (const auto* e = std::get_if<TwoFociEllipse>(&spec)) {
    return std::pair{std::vector<Point>{e->focus1, e->focus2}, -e->gamma};
  }
  if (const auto* s = std::get_if<SumEllipse>(&spec)) return std::pair{s->foci, s->sum};
  return std::nullopt;
}

BoundingBox pad(BoundingBox box, double fraction) {
  double margin = fraction * std::max(box.width(), box.height());
  if (margin <= 0.0) margin = 1.0;
  return {box.x0 - margin, box.y0 - margin, box.x1 + margin, box.y1 + margin};
}

void path(std::ostringstream& svg, const std::vector<Point>& pts, bool closed, const char* cls) {
  svg << "  <path class=\"" << cls << "\" d=\"";
  for (std::size_t i = 0; i < pts.size(); ++i) {
    svg << (i == 0 ? "M" : " L") << num(pts[i].x) << ' ' << num(pts[i].y);
  }
  if (closed) svg << " Z";
  svg << "\"/>\n";
}

}  // namespace

BoundingBox default_render_box(const ConicSpec& spec) {
  validate(spec);
  const auto foci = foci_of(spec);
  if (auto sep = as_sum_ellipse(spec)) {
    const auto shape = sum_ellipse_polygon(sep->first, sep->second);
    if (const auto* poly = std::get_if<Polygon>(&shape)) {
      auto pts = poly->vertices;
      pts.insert(pts.end(), foci.begin(), foci.end());
      return pad(bounding_box(pts), 0.2);
    }
    return pad(bounding_box(foci), 0.2);
  }
  if (const auto* h = std::get_if<TwoFociHyperbola>(&spec)) {
    const double reach = std::max({taxicab_distance(h->focus1, h->focus2), -h->gamma, 1.0});
    const BoundingBox box = bounding_box(foci);
    return {box.x0 - reach, box.y0 - reach, box.x1 + reach, box.y1 + reach};
  }
  const auto& p = std::get<Parabola>(spec);
  const double reach = 3.0 * std::max(point_line_distance_taxicab(p.focus, p.directrix), 1.0);
  return {p.focus.x - reach, p.focus.y - reach, p.focus.x + reach, p.focus.y + reach};
}

std::string render_svg(const ConicSpec& spec, const std::optional<BoundingBox>& bbox, int resolution) {
  validate(spec);
  const BoundingBox box = bbox ? *bbox : default_render_box(spec);
  const double stroke = std::max(box.width(), box.height()) / 250.0;

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"" << num(box.x0) << ' '
      << num(-box.y1) << ' ' << num(box.width()) << ' ' << num(box.height()) << "\" width=\"600\" height=\""
      << num(600.0 * box.height() / box.width()) << "\">\n"
      << "<title>taxicab " << family_name(spec) << "</title>\n"
      << "<g transform=\"scale(1,-1)\" fill=\"none\" stroke=\"black\" stroke-width=\"" << num(stroke)
      << "\">\n";

  if (auto sep = as_sum_ellipse(spec)) {
    const auto shape = sum_ellipse_polygon(sep->first, sep->second);
    if (const auto* poly = std::get_if<Polygon>(&shape)) {
      path(svg, poly->vertices, true, "curve");
    } else {
      const auto& set = std::get<DegenerateSet>(shape);
      if (const auto* r = std::get_if<Rectangle>(&set)) {
        path(svg,
             {r->corner_lo, {r->corner_hi.x, r->corner_lo.y}, r->corner_hi, {r->corner_lo.x, r->corner_hi.y}},
             true, "curve");
      } else if (const auto* s = std::get_if<Segment>(&set)) {
        path(svg, {s->from, s->to}, false, "curve");
      } else if (const auto* pt = std::get_if<SinglePoint>(&set)) {
        svg << "  <circle class=\"curve\" cx=\"" << num(pt->point.x) << "\" cy=\"" << num(pt->point.y)
            << "\" r=\"" << num(2 * stroke) << "\" fill=\"black\"/>\n";
      } else {
        svg << "  <!-- empty region -->\n";
      }
    }
  } else {
    for (const auto& chain : contour_sample(spec, box, resolution)) {
      path(svg, chain.vertices, chain.closed, "curve");
    }
    if (const auto* p = std::get_if<Parabola>(&spec)) {
      const Line& l = p->directrix;
      Point a, b;
      if (std::abs(l.b) >= std::abs(l.a)) {
        a = {box.x0, -(l.a * box.x0 + l.c) / l.b};
        b = {box.x1, -(l.a * box.x1 + l.c) / l.b};
      } else {
        a = {-(l.b * box.y0 + l.c) / l.a, box.y0};
        b = {-(l.b * box.y1 + l.c) / l.a, box.y1};
      }
      svg << "  <line class=\"directrix\" x1=\"" << num(a.x) << "\" y1=\"" << num(a.y) << "\" x2=\""
          << num(b.x) << "\" y2=\"" << num(b.y) << "\" stroke-dasharray=\"" << num(4 * stroke) << "\"/>\n";
    }
  }

  for (const auto& f : foci_of(spec)) {
    svg << "  <circle class=\"focus\" cx=\"" << num(f.x) << "\" cy=\"" << num(f.y) << "\" r=\""
        << num(2 * stroke) << "\" fill=\"red\" stroke=\"none\"/>\n";
  }
  svg << "</g>\n</svg>\n";
  return svg.str();
}

}  // namespace taxicab::cli
