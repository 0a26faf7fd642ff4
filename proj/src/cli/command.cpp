#include "taxicab/cli/command.hpp"

#include <algorithm>
#include <boost/rational.hpp>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <tuple>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "taxicab/cli/render.hpp"
#include "taxicab/conic.hpp"
#include "taxicab/errors.hpp"
#include "taxicab/measures.hpp"
#include "taxicab/scan.hpp"

namespace taxicab::cli {
namespace {

using json = nlohmann::ordered_json;
using Rational = boost::rational<long long>;

std::string strip_spaces(const std::string& text) {
  std::string out;
  std::copy_if(text.begin(), text.end(), std::back_inserter(out),
               [](unsigned char c) { return !std::isspace(c); });
  return out;
}

double parse_number(const std::string& text, const char* what) {
  const std::string t = strip_spaces(text);
  double value = 0.0;
  const char* first = t.data();
  const char* last = t.data() + t.size();
  if (!t.empty() && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (t.empty() || ec != std::errc() || ptr != last || !std::isfinite(value)) {
    throw InvalidArgument(std::string("malformed ") + what + " '" + text + "'");
  }
  return value;
}

std::vector<double> parse_list(const std::string& text, char sep, const char* what) {
  std::vector<double> out;
  std::stringstream ss(strip_spaces(text));
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(parse_number(item, what));
  if (!text.empty() && strip_spaces(text).back() == sep) {
    throw InvalidArgument(std::string("malformed ") + what + " '" + text + "'");
  }
  return out;
}

// Exact value of a plain decimal literal such as "-2.5"; nullopt for
// exponents or values that do not fit.
std::optional<Rational> parse_rational(const std::string& text) {
  const std::string t = strip_spaces(text);
  std::size_t i = 0;
  bool negative = false;
  if (i < t.size() && (t[i] == '-' || t[i] == '+')) negative = t[i++] == '-';
  long long num = 0;
  long long den = 1;
  bool digits = false;
  bool fraction = false;
  for (; i < t.size(); ++i) {
    const char c = t[i];
    if (c == '.' && !fraction) {
      fraction = true;
      continue;
    }
    if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
    if (num > 100'000'000'000'000LL || den > 100'000'000'000'000LL) return std::nullopt;
    num = num * 10 + (c - '0');
    if (fraction) den *= 10;
    digits = true;
  }
  if (!digits) return std::nullopt;
  return Rational(negative ? -num : num, den);
}

std::string fraction_text(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::string shortest(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

json point_json(const Point& p) { return json::array({p.x, p.y}); }

json measure_json(const Measure& m) {
  return json{{"area", m.area}, {"perimeter", m.perimeter}, {"metric", m.perimeter_metric.name()}};
}

json degenerate_json(const DegenerateSet& set) {
  if (const auto* p = std::get_if<SinglePoint>(&set)) return json{{"kind", "point"}, {"point", point_json(p->point)}};
  if (const auto* s = std::get_if<Segment>(&set)) {
    return json{{"kind", "segment"}, {"from", point_json(s->from)}, {"to", point_json(s->to)}};
  }
  if (const auto* r = std::get_if<Rectangle>(&set)) {
    return json{{"kind", "rectangle"}, {"lo", point_json(r->corner_lo)}, {"hi", point_json(r->corner_hi)}};
  }
  return json{{"kind", "empty"}};
}

double require(const std::optional<double>& v, const char* flag) {
  if (!v) throw InvalidArgument(std::string("missing required flag ") + flag);
  return *v;
}

double require(const std::optional<std::string>& v, const char* flag, const char* what) {
  if (!v) throw InvalidArgument(std::string("missing required flag ") + flag);
  return parse_number(*v, what);
}

void require_foci(const CommandRequest& req, std::size_t count) {
  if (req.foci.size() != count) {
    throw InvalidArgument("--family " + req.family + " needs exactly " + std::to_string(count) +
                          (count == 1 ? " focus" : " foci") + " in --foci");
  }
}

ConicSpec build_spec(const CommandRequest& req) {
  const std::string& fam = req.family;
  ConicSpec spec;
  if (fam == "circle") {
    if (req.foci.size() > 1) throw InvalidArgument("--family circle takes at most one centre in --foci");
    spec = Circle{req.foci.empty() ? Point{} : req.foci[0], require(req.radius, "--radius", "radius")};
  } else if (fam == "ellipse") {
    require_foci(req, 2);
    spec = TwoFociEllipse{req.foci[0], req.foci[1], require(req.gamma, "--gamma")};
  } else if (fam == "hyperbola") {
    require_foci(req, 2);
    spec = TwoFociHyperbola{req.foci[0], req.foci[1], require(req.gamma, "--gamma")};
  } else if (fam == "parabola") {
    require_foci(req, 1);
    if (!req.line) throw InvalidArgument("missing required flag --line");
    spec = Parabola{req.foci[0], *req.line, require(req.eccentricity, "--eccentricity")};
  } else if (fam == "trifocal") {
    std::vector<Point> foci(kCanonicalTrifocalFoci.begin(), kCanonicalTrifocalFoci.end());
    if (!req.foci.empty()) {
      require_foci(req, 3);
      foci = req.foci;
    }
    spec = SumEllipse{foci, require(req.sum, "--sum", "sum")};
  } else if (fam == "sumellipse") {
    if (req.foci.empty()) throw InvalidArgument("--family sumellipse needs --foci");
    spec = SumEllipse{req.foci, require(req.sum, "--sum", "sum")};
  } else if (fam.empty()) {
    throw InvalidArgument("missing required flag --family");
  } else {
    throw InvalidArgument("unknown family '" + fam + "'");
  }
  validate(spec);
  return spec;
}

// Focus list and level of the separable families.
std::pair<std::vector<Point>, double> separable(const ConicSpec& spec) {
  if (const auto* c = std::get_if<Circle>(&spec)) return {{c->center}, c->radius};
  if (const auto* e = std::get_if<TwoFociEllipse>(&spec)) return {{e->focus1, e->focus2}, -e->gamma};
  if (const auto* s = std::get_if<SumEllipse>(&spec)) return {s->foci, s->sum};
  throw InvalidArgument(family_name(spec) + " is an open curve; area and perimeter are not defined");
}

json input_json(const CommandRequest& req) {
  json in;
  if (!req.family.empty()) in["family"] = req.family;
  if (!req.foci.empty()) {
    json foci = json::array();
    for (const auto& f : req.foci) foci.push_back(point_json(f));
    in["foci"] = foci;
  }
  if (req.gamma) in["gamma"] = *req.gamma;
  if (req.sum) in["sum"] = parse_number(*req.sum, "sum");
  if (req.radius) in["radius"] = parse_number(*req.radius, "radius");
  if (req.eccentricity) in["eccentricity"] = *req.eccentricity;
  if (req.line) in["line"] = json::array({req.line->a, req.line->b, req.line->c});
  if (req.command == "scan") {
    in["metric"] = req.metric.name();
    in["step"] = req.step;
  }
  if (req.command == "render") in["resolution"] = req.resolution;
  return in;
}

std::string regime_code(EllipseClass::Kind k) {
  switch (k) {
    case EllipseClass::Kind::Hexagon:
      return "E.1";
    case EllipseClass::Kind::Octagon:
      return "E.2";
    case EllipseClass::Kind::DegenerateRectangle:
      return "E.3";
    case EllipseClass::Kind::Empty:
      break;
  }
  return "";
}

std::string regime_code(HyperbolaClass::Kind k) {
  switch (k) {
    case HyperbolaClass::Kind::RegionsWithTails:
      return "H.1";
    case HyperbolaClass::Kind::ParallelLines:
      return "H.2";
    case HyperbolaClass::Kind::TrueHyperbola:
      return "H.3";
    case HyperbolaClass::Kind::Degenerate:
      break;
  }
  return "";
}

std::string regime_code(ParabolaClass::Kind k) {
  if (k == ParabolaClass::Kind::Unclassified) return "";
  const std::string name = to_string(k);
  return name.substr(0, 1) + "." + name.substr(1);
}

template <class Class>
json class_json(const std::string& family, const Class& cls) {
  json out{{"family", family}, {"class", to_string(cls.kind)}};
  const std::string code = regime_code(cls.kind);
  out["regime"] = code.empty() ? json(nullptr) : json(code);
  out["predicate"] = predicate_text(cls.kind);
  out["extrapolated"] = cls.extrapolated();
  return out;
}

json sum_ellipse_class_json(const ConicSpec& spec) {
  const auto [foci, level] = separable(spec);
  const auto fermat = fermat_point_taxicab(foci);
  const auto shape = sum_ellipse_polygon(foci, level);
  json out{{"family", family_name(spec)}};
  if (const auto* poly = std::get_if<Polygon>(&shape)) {
    out["class"] = "polygon";
    out["vertex_count"] = poly->vertices.size();
  } else {
    const json set = degenerate_json(std::get<DegenerateSet>(shape));
    out["class"] = set["kind"] == "empty" ? "empty" : "fermat_set";
    if (set["kind"] != "empty") out["degenerate_set"] = set;
  }
  out["s0"] = fermat.s0;
  return out;
}

json classification(const ConicSpec& spec) {
  if (const auto* e = std::get_if<TwoFociEllipse>(&spec)) {
    const auto cls = classify_ellipse(e->focus1, e->focus2, e->gamma);
    json out = class_json("ellipse", cls);
    out["delta"] = cls.delta;
    return out;
  }
  if (const auto* h = std::get_if<TwoFociHyperbola>(&spec)) {
    const auto cls = classify_hyperbola(h->focus1, h->focus2, h->gamma);
    json out = class_json("hyperbola", cls);
    out["eta"] = cls.eta;
    out["delta"] = cls.delta;
    return out;
  }
  if (const auto* p = std::get_if<Parabola>(&spec)) {
    const auto cls = classify_parabola(p->focus, p->directrix, p->eccentricity);
    json out = class_json("parabola", cls);
    out["rho"] = std::isinf(cls.rho) ? json(nullptr) : json(cls.rho);
    out["rho_infinite"] = std::isinf(cls.rho);
    return out;
  }
  return sum_ellipse_class_json(spec);
}

void add_class_warning(json& warnings, const json& cls) {
  if (cls.contains("extrapolated") && cls["extrapolated"].get<bool>()) {
    warnings.push_back("class '" + cls["class"].get<std::string>() +
                       "' is outside the named regimes (extrapolated: true)");
  }
}

json cmd_classify(const CommandRequest& req, json& warnings) {
  const ConicSpec spec = build_spec(req);
  json cls = classification(spec);
  add_class_warning(warnings, cls);
  return json{{"classification", cls}};
}

std::optional<json> exact_closed_form(const CommandRequest& req, const ConicSpec& spec) {
  try {
    if (std::holds_alternative<Circle>(spec) && req.radius) {
      if (auto r = parse_rational(*req.radius)) {
        const auto m = circle_formula(*r);
        return json{{"area", fraction_text(m.area)}, {"perimeter", fraction_text(m.perimeter)}};
      }
    }
    if (const auto* s = std::get_if<SumEllipse>(&spec); s && is_canonical_trifocal(s->foci) && req.sum) {
      if (auto v = parse_rational(*req.sum)) {
        const auto m = trifocal_formula(*v);
        return json{{"area", fraction_text(m.area)}, {"perimeter", fraction_text(m.perimeter)}};
      }
    }
  } catch (const std::exception&) {
    // boost::rational overflow; the floating result is still reported.
  }
  return std::nullopt;
}

json cmd_measure(const CommandRequest& req, json& warnings) {
  const ConicSpec spec = build_spec(req);
  const auto [foci, level] = separable(spec);
  json out;
  if (std::holds_alternative<TwoFociEllipse>(spec)) {
    json cls = classification(spec);
    add_class_warning(warnings, cls);
    out["classification"] = cls;
  }
  const auto formula = closed_form_measures(spec);
  const Measure oracle = measures_oracle(foci, level);
  out["closed_form"] = formula ? measure_json(*formula) : json(nullptr);
  if (auto exact = exact_closed_form(req, spec)) out["closed_form_exact"] = *exact;
  out["oracle"] = measure_json(oracle);
  if (formula) {
    const auto rep = reconcile(*formula, oracle);
    out["reconciliation"] = json{{"area_abs_diff", rep.area_abs_diff},
                                 {"perimeter_abs_diff", rep.perimeter_abs_diff},
                                 {"area_agrees", rep.area_agrees},
                                 {"perimeter_agrees", rep.perimeter_agrees},
                                 {"tolerance", kReconcileTolerance}};
    if (!rep.area_agrees) {
      warnings.push_back("area disagreement: closed form gives " + shortest(formula->area) +
                         ", polygon oracle gives " + shortest(oracle.area));
    }
    if (!rep.perimeter_agrees) {
      warnings.push_back("perimeter disagreement: closed form gives " + shortest(formula->perimeter) +
                         ", polygon oracle gives " + shortest(oracle.perimeter));
    }
  } else {
    out["reconciliation"] = nullptr;
    warnings.push_back("no closed form for these parameters; oracle only");
  }
  return out;
}

std::pair<double, double> x_extent(const DegenerateSet& set) {
  if (const auto* p = std::get_if<SinglePoint>(&set)) return {p->point.x, p->point.x};
  if (const auto* s = std::get_if<Segment>(&set)) return {std::min(s->from.x, s->to.x), std::max(s->from.x, s->to.x)};
  if (const auto* r = std::get_if<Rectangle>(&set)) return {r->corner_lo.x, r->corner_hi.x};
  throw EmptyRegion("focal sum is below the minimum S0");
}

ScanResult run_scan(const CommandRequest& req, const ConicSpec& spec, ScanConfig& cfg) {
  const auto [foci, level] = separable(spec);
  cfg.step = req.step;
  cfg.metric = req.metric;
  if (!req.start_x || !req.end_x) {
    // A Euclidean level set lies inside the taxicab one at level √2·S.
    const double reach = req.metric.kind() == Metric::Kind::Taxicab ? level : level * std::sqrt(2.0);
    const auto shape = sum_ellipse_polygon(foci, reach);
    double lo = 0.0;
    double hi = 0.0;
    if (const auto* poly = std::get_if<Polygon>(&shape)) {
      const auto box = bounding_box(poly->vertices);
      lo = box.x0;
      hi = box.x1;
    } else {
      std::tie(lo, hi) = x_extent(std::get<DegenerateSet>(shape));
    }
    cfg.start_x = req.start_x.value_or(lo);
    cfg.end_x = req.end_x.value_or(hi);
  } else {
    cfg.start_x = *req.start_x;
    cfg.end_x = *req.end_x;
  }
  return scan_area_perimeter(sum_ellipse_region(foci, level, req.metric), cfg);
}

std::string scan_csv(const ScanResult& res) {
  std::string csv = "x,min_y,max_y\n";
  for (const auto& c : res.columns) {
    csv += shortest(c.x) + "," + shortest(c.min_y) + "," + shortest(c.max_y) + "\n";
  }
  return csv;
}

json cmd_scan(const CommandRequest& req, const ConicSpec& spec, const ScanResult& res, const ScanConfig& cfg,
              json& warnings) {
  json out{{"config", json{{"start_x", cfg.start_x},
                           {"end_x", cfg.end_x},
                           {"step", cfg.step},
                           {"metric", cfg.metric.name()},
                           {"root_tol", cfg.root_tol},
                           {"y_bracket", cfg.y_bracket}}},
           {"scan", json{{"area", res.area},
                         {"perimeter", res.perimeter},
                         {"columns_hit", res.columns_hit},
                         {"columns_empty", res.columns_empty}}}};
  const auto [foci, level] = separable(spec);
  if (req.metric.kind() == Metric::Kind::Taxicab) {
    const Measure oracle = measures_oracle(foci, level);
    out["oracle"] = measure_json(oracle);
    out["relative_error"] = json{{"area", oracle.area > 0 ? std::abs(res.area - oracle.area) / oracle.area : 0.0},
                                 {"perimeter", oracle.perimeter > 0
                                                   ? std::abs(res.perimeter - oracle.perimeter) / oracle.perimeter
                                                   : 0.0}};
  } else if (is_canonical_trifocal(foci)) {
    if (auto ref = reference_euclidean_trifocal(level)) {
      out["reference"] = measure_json(*ref);
      out["relative_error"] = json{{"area", std::abs(res.area - ref->area) / ref->area},
                                   {"perimeter", std::abs(res.perimeter - ref->perimeter) / ref->perimeter}};
    }
  }
  if (res.columns_hit < 2) warnings.push_back("fewer than two columns met the region; decrease --step");
  return out;
}

json cmd_fermat(const CommandRequest& req) {
  std::vector<Point> foci = req.foci;
  if (foci.empty()) {
    if (req.family != "trifocal") throw InvalidArgument("missing required flag --foci");
    foci.assign(kCanonicalTrifocalFoci.begin(), kCanonicalTrifocalFoci.end());
  }
  const auto res = fermat_point_taxicab(foci);
  return json{{"fermat", json{{"s0", res.s0}, {"minimizing_set", degenerate_json(res.minimizing_set)}}}};
}

OutputFormat resolve_format(const CommandRequest& req) {
  const OutputFormat fallback = req.command == "render" ? OutputFormat::Svg : OutputFormat::Json;
  const OutputFormat fmt = req.format.value_or(fallback);
  if (fmt == OutputFormat::Csv && req.command != "scan") throw InvalidArgument("--format csv applies to scan only");
  if (fmt == OutputFormat::Svg && req.command != "render") throw InvalidArgument("--format svg applies to render only");
  if (req.command == "render" && fmt != OutputFormat::Svg) throw InvalidArgument("render writes svg only");
  return fmt;
}

}  // namespace

std::vector<Point> parse_foci(const std::string& text) {
  const std::string t = strip_spaces(text);
  if (t.empty()) throw InvalidArgument("empty --foci");
  std::vector<Point> foci;
  std::stringstream ss(t);
  std::string pair;
  while (std::getline(ss, pair, ';')) {
    const auto xy = parse_list(pair, ',', "focus");
    if (xy.size() != 2) throw InvalidArgument("malformed focus '" + pair + "'; expected x,y");
    foci.push_back({xy[0], xy[1]});
  }
  if (t.back() == ';') throw InvalidArgument("malformed --foci '" + text + "'");
  return foci;
}

Line parse_line(const std::string& text) {
  const auto abc = parse_list(text, ',', "line");
  if (abc.size() != 3) throw InvalidArgument("malformed --line '" + text + "'; expected a,b,c");
  Line l{abc[0], abc[1], abc[2]};
  l.validate();
  return l;
}

BoundingBox parse_bbox(const std::string& text) {
  const auto v = parse_list(text, ',', "bbox");
  if (v.size() != 4) throw InvalidArgument("malformed --bbox '" + text + "'; expected x0,y0,x1,y1");
  const BoundingBox box{std::min(v[0], v[2]), std::min(v[1], v[3]), std::max(v[0], v[2]), std::max(v[1], v[3])};
  if (!(box.width() > 0.0) || !(box.height() > 0.0)) throw InvalidArgument("--bbox has zero width or height");
  return box;
}

CommandReport run_command(const CommandRequest& req) {
  CommandReport report;
  json& body = report.body;
  body["command"] = req.command;
  json warnings = json::array();
  try {
    const OutputFormat fmt = resolve_format(req);
    if (!(req.step > 0.0) || !std::isfinite(req.step)) throw InvalidArgument("--step must be > 0");
    if (req.resolution < 2) throw InvalidArgument("--resolution must be >= 2");
    body["input"] = input_json(req);
    json result;
    if (req.command == "classify") {
      result = cmd_classify(req, warnings);
    } else if (req.command == "measure") {
      result = cmd_measure(req, warnings);
    } else if (req.command == "scan") {
      const ConicSpec spec = build_spec(req);
      ScanConfig cfg;
      const ScanResult res = run_scan(req, spec, cfg);
      result = cmd_scan(req, spec, res, cfg, warnings);
      if (fmt == OutputFormat::Csv) report.payload = scan_csv(res);
    } else if (req.command == "render") {
      const ConicSpec spec = build_spec(req);
      const BoundingBox box = req.bbox ? *req.bbox : default_render_box(spec);
      report.payload = render_svg(spec, box, req.resolution);
      result = json{{"bbox", json::array({box.x0, box.y0, box.x1, box.y1})}};
    } else if (req.command == "fermat") {
      result = cmd_fermat(req);
    } else {
      throw InvalidArgument("unknown command '" + req.command + "'");
    }
    for (auto& [key, value] : result.items()) body[key] = value;
    body["warnings"] = warnings;
    if (fmt == OutputFormat::Json) report.payload = body.dump(2) + "\n";
  } catch (const EmptyRegion& e) {
    report.exit_code = ExitCode::EmptyRegion;
    body["error"] = json{{"kind", "empty_region"}, {"message", e.what()}};
  } catch (const NoMeasure& e) {
    report.exit_code = ExitCode::EmptyRegion;
    body["error"] = json{{"kind", "empty_region"}, {"message", e.what()}};
  } catch (const Error& e) {
    report.exit_code = ExitCode::InvalidInput;
    body["error"] = json{{"kind", "invalid_input"}, {"message", e.what()}};
  }
  if (report.exit_code != ExitCode::Ok) report.payload = body.dump(2) + "\n";
  return report;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Taxicab conics and trifocal ellipses: classify, measure, scan, render"};
  app.require_subcommand(1);

  struct Flags {
    std::string family, foci, gamma, sum, radius, eccentricity, line, metric = "taxicab", step = "0.01",
        start_x, end_x, bbox, format, out;
    int resolution = 200;
  };
  Flags flags;

  auto add_curve_flags = [&](CLI::App* sub) {
    sub->add_option("--family", flags.family, "circle|ellipse|hyperbola|parabola|trifocal|sumellipse");
    sub->add_option("--foci", flags.foci, "semicolon-separated x,y pairs, e.g. \"-1,0;1,0;0,0\"");
    sub->add_option("--gamma", flags.gamma, "nonpositive constant of the two-focus equations");
    sub->add_option("--sum", flags.sum, "focal-distance sum S");
    sub->add_option("--radius", flags.radius, "circle radius");
    sub->add_option("--eccentricity", flags.eccentricity, "parabola eccentricity e");
    sub->add_option("--line", flags.line, "directrix coefficients a,b,c of ax+by+c=0");
    sub->add_option("--format", flags.format, "json|csv|svg");
    sub->add_option("--out", flags.out, "output path (default: standard output)");
  };

  std::vector<std::pair<std::string, CLI::App*>> subs;
  for (const auto* name : {"classify", "measure", "scan", "render", "fermat"}) {
    static const std::map<std::string, std::string> help{
        {"classify", "report the regime of a curve"},
        {"measure", "closed-form and polygon-oracle area and perimeter"},
        {"scan", "column-sweep estimate of area and perimeter"},
        {"render", "write an SVG drawing"},
        {"fermat", "taxicab Fermat point (set) of the foci"}};
    CLI::App* sub = app.add_subcommand(name, help.at(name));
    add_curve_flags(sub);
    subs.emplace_back(name, sub);
  }
  CLI::App* scan = subs[2].second;
  scan->add_option("--metric", flags.metric, "taxicab|euclidean");
  scan->add_option("--step", flags.step, "column spacing");
  scan->add_option("--startx", flags.start_x, "first column");
  scan->add_option("--endx", flags.end_x, "last column bound");
  CLI::App* render = subs[3].second;
  render->add_option("--bbox", flags.bbox, "x0,y0,x1,y1");
  render->add_option("--resolution", flags.resolution, "contour lattice nodes per side");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return e.get_exit_code() == 0 ? 0 : static_cast<int>(ExitCode::InvalidInput);
  }

  CommandRequest req;
  for (const auto& [name, sub] : subs) {
    if (sub->parsed()) req.command = name;
  }
  try {
    req.family = flags.family;
    if (!flags.foci.empty()) req.foci = parse_foci(flags.foci);
    if (!flags.gamma.empty()) req.gamma = parse_number(flags.gamma, "--gamma");
    if (!flags.sum.empty()) req.sum = flags.sum;
    if (!flags.radius.empty()) req.radius = flags.radius;
    if (!flags.eccentricity.empty()) req.eccentricity = parse_number(flags.eccentricity, "--eccentricity");
    if (!flags.line.empty()) req.line = parse_line(flags.line);
    req.metric = parse_metric(flags.metric);
    req.step = parse_number(flags.step, "--step");
    if (!flags.start_x.empty()) req.start_x = parse_number(flags.start_x, "--startx");
    if (!flags.end_x.empty()) req.end_x = parse_number(flags.end_x, "--endx");
    if (!flags.bbox.empty()) req.bbox = parse_bbox(flags.bbox);
    req.resolution = flags.resolution;
    if (flags.format == "json") req.format = OutputFormat::Json;
    else if (flags.format == "csv") req.format = OutputFormat::Csv;
    else if (flags.format == "svg") req.format = OutputFormat::Svg;
    else if (!flags.format.empty()) throw InvalidArgument("unknown --format '" + flags.format + "'");
    req.out_path = flags.out;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return static_cast<int>(ExitCode::InvalidInput);
  }

  const CommandReport report = run_command(req);
  if (report.exit_code != ExitCode::Ok) {
    err << "error: " << report.body["error"]["message"].get<std::string>() << "\n";
    out << report.payload;
    return static_cast<int>(report.exit_code);
  }
  if (req.out_path.empty()) {
    out << report.payload;
  } else {
    std::ofstream file(req.out_path, std::ios::binary);
    if (!(file << report.payload) || !file.flush()) {
      err << "error: cannot write " << req.out_path << "\n";
      return static_cast<int>(ExitCode::InvalidInput);
    }
  }
  return static_cast<int>(ExitCode::Ok);
}

}  // namespace taxicab::cli
