#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "taxicab/metric.hpp"
#include "taxicab/polygonize.hpp"

namespace taxicab::cli {

enum class ExitCode : int { Ok = 0, InvalidInput = 2, EmptyRegion = 3 };

enum class OutputFormat { Json, Csv, Svg };

struct CommandRequest {
  std::string command;  // classify | measure | scan | render | fermat
  std::string family;   // circle | ellipse | hyperbola | parabola | trifocal | sumellipse
  std::vector<Point> foci;
  std::optional<double> gamma;
  std::optional<std::string> sum;     // decimal text, kept for exact rational output
  std::optional<std::string> radius;  // same
  std::optional<double> eccentricity;
  std::optional<Line> line;
  Metric metric = Metric::taxicab();
  double step = 0.01;
  std::optional<double> start_x;
  std::optional<double> end_x;
  std::optional<BoundingBox> bbox;
  int resolution = 200;
  std::optional<OutputFormat> format;
  std::string out_path;  // empty: standard output
};

struct CommandReport {
  nlohmann::ordered_json body;
  std::string payload;  // serialized output (JSON text, CSV, or SVG)
  ExitCode exit_code = ExitCode::Ok;
};

/// Semicolon-separated "x,y" pairs, e.g. "-1,0;1,0;0,0". Whitespace is ignored.
std::vector<Point> parse_foci(const std::string& text);
/// "a,b,c" for the line a x + b y + c = 0.
Line parse_line(const std::string& text);
/// "x0,y0,x1,y1".
BoundingBox parse_bbox(const std::string& text);

/// Executes a validated request. Library errors are mapped to exit codes and
/// reported in the body under "error".
CommandReport run_command(const CommandRequest& req);

/// Full front end: parses argv-style arguments (without the program name),
/// runs the command, and writes the payload to `out` or to --out.
/// Diagnostics go to `err`. Returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace taxicab::cli
