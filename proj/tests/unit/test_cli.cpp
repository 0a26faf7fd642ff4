#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "taxicab/cli/command.hpp"
#include "taxicab/cli/render.hpp"
#include "taxicab/errors.hpp"

using namespace taxicab;
using namespace taxicab::cli;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

json run_json(const std::vector<std::string>& args) {
  const auto r = run(args);
  REQUIRE(r.code == 0);
  return json::parse(r.out);
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("wire formats") {
  const auto foci = parse_foci(" -1,0 ; 1,0;0, 0 ");
  REQUIRE(foci.size() == 3);
  CHECK(foci[0] == Point{-1, 0});
  CHECK(foci[2] == Point{0, 0});
  CHECK_THROWS_AS(parse_foci("1,2;3"), InvalidArgument);
  CHECK_THROWS_AS(parse_foci("1,2;"), InvalidArgument);
  CHECK_THROWS_AS(parse_foci("a,b"), InvalidArgument);
  CHECK_THROWS_AS(parse_foci(""), InvalidArgument);
  CHECK(parse_line("2,1,-5") == Line{2, 1, -5});
  CHECK_THROWS_AS(parse_line("0,0,1"), InvalidArgument);
  CHECK_THROWS_AS(parse_line("1,2"), InvalidArgument);
  const auto box = parse_bbox("2,3,-1,0");
  CHECK(box.x0 == -1);
  CHECK(box.y1 == 3);
  CHECK_THROWS_AS(parse_bbox("0,0,0,1"), InvalidArgument);
}

TEST_CASE("classify ellipse") {
  const auto j = run_json({"classify", "--family", "ellipse", "--foci", "0,0;2,0", "--gamma", "-4"});
  CHECK(j["classification"]["class"] == "hexagon");
  CHECK(j["classification"]["regime"] == "E.1");
  CHECK(j["classification"]["delta"] == 2.0);
  CHECK(j["classification"]["extrapolated"] == false);
}

TEST_CASE("classify flags extrapolated classes") {
  const auto j = run_json({"classify", "--family", "hyperbola", "--foci", "0,0;4,2", "--gamma", "-7"});
  CHECK(j["classification"]["class"] == "degenerate");
  CHECK(j["classification"]["extrapolated"] == true);
  CHECK(j["classification"]["regime"].is_null());
  CHECK(j["warnings"].size() == 1);
  const auto p = run_json({"classify", "--family", "parabola", "--foci", "0,0", "--line", "1,0,-2", "--eccentricity",
                           "0.5"});
  CHECK(p["classification"]["class"] == "P4");
  CHECK(p["classification"]["regime"] == "P.4");
  CHECK(p["classification"]["rho"].is_null());
  CHECK(p["classification"]["rho_infinite"] == true);
}

TEST_CASE("measure trifocal reports both values and the disagreement") {
  const auto j = run_json({"measure", "--family", "trifocal", "--sum", "3"});
  CHECK(j["closed_form_exact"]["area"] == "4/3");
  CHECK(j["closed_form_exact"]["perimeter"] == "16/3");
  CHECK(j["oracle"]["area"].get<double>() == doctest::Approx(2.0 / 3));
  CHECK(j["oracle"]["perimeter"].get<double>() == doctest::Approx(16.0 / 3));
  CHECK(j["reconciliation"]["area_agrees"] == false);
  CHECK(j["reconciliation"]["perimeter_agrees"] == true);
  CHECK(j["warnings"].size() == 1);
  const auto k = run_json({"measure", "--family", "trifocal", "--sum", "2.5"});
  CHECK(k["closed_form_exact"]["area"] == "1/3");
  CHECK(k["closed_form_exact"]["perimeter"] == "8/3");
}

TEST_CASE("classify and measure agree on the ellipse class") {
  for (const char* gamma : {"-4", "-5", "-3"}) {
    for (const char* foci : {"0,0;2,0", "0,0;2,1"}) {
      const std::vector<std::string> flags{"--family", "ellipse", "--foci", foci, "--gamma", gamma};
      std::vector<std::string> a{"classify"}, b{"measure"};
      a.insert(a.end(), flags.begin(), flags.end());
      b.insert(b.end(), flags.begin(), flags.end());
      const auto ra = run(a);
      const auto rb = run(b);
      const auto ja = json::parse(ra.out);
      if (ja["classification"]["class"] == "empty") {
        CHECK(rb.code == 3);
      } else {
        CHECK(json::parse(rb.out)["classification"] == ja["classification"]);
      }
    }
  }
}

TEST_CASE("scan") {
  const auto j = run_json({"scan", "--foci", "-1,0;1,0;0,0", "--family", "sumellipse", "--sum", "3", "--metric",
                           "euclidean", "--step", "0.005", "--startx", "-1.5", "--endx", "1.5"});
  CHECK(std::abs(j["scan"]["area"].get<double>() - 1.7758) / 1.7758 < 0.02);
  CHECK(j["reference"]["area"] == 1.7758);
  const auto c = run_json({"scan", "--family", "circle", "--radius", "1", "--step", "0.5"});
  CHECK(c["scan"]["area"] == 2.0);
  CHECK(c["scan"]["perimeter"] == 8.0);
  const auto csv = run({"scan", "--family", "circle", "--radius", "1", "--step", "0.5", "--format", "csv"});
  CHECK(csv.code == 0);
  CHECK(csv.out == "x,min_y,max_y\n-1,0,0\n-0.5,-0.5,0.5\n0,-1,1\n0.5,-0.5,0.5\n1,0,0\n");
}

TEST_CASE("fermat") {
  const auto j = run_json({"fermat", "--foci", "0,0;2,1"});
  CHECK(j["fermat"]["s0"] == 3.0);
  CHECK(j["fermat"]["minimizing_set"]["kind"] == "rectangle");
  const auto t = run_json({"fermat", "--family", "trifocal"});
  CHECK(t["fermat"]["minimizing_set"]["kind"] == "point");
  CHECK(t["fermat"]["s0"] == 2.0);
}

TEST_CASE("exit codes") {
  CHECK(run({"classify", "--family", "ellipse", "--foci", "0,0;2", "--gamma", "-4"}).code == 2);
  CHECK(run({"classify", "--family", "ellipse", "--foci", "0,0;2,0"}).code == 2);
  CHECK(run({"classify", "--family", "ellipse", "--foci", "0,0;2,0", "--gamma", "1"}).code == 2);
  CHECK(run({"measure", "--family", "hyperbola", "--foci", "0,0;2,0", "--gamma", "-1"}).code == 2);
  CHECK(run({"classify", "--family", "spiral"}).code == 2);
  CHECK(run({"nonsense"}).code == 2);
  CHECK(run({"classify", "--family", "circle", "--radius", "1", "--format", "csv"}).code == 2);
  const auto empty = run({"measure", "--family", "ellipse", "--foci", "0,0;2,1", "--gamma", "-2"});
  CHECK(empty.code == 3);
  CHECK(json::parse(empty.out)["error"]["kind"] == "empty_region");
  CHECK(run({"measure", "--family", "sumellipse", "--foci", "-1,0;1,0;0,0", "--sum", "1"}).code == 3);
  CHECK(run({"scan", "--family", "circle", "--radius", "1", "--startx", "5", "--endx", "6"}).code == 3);
  CHECK(run({"measure", "--family", "circle", "--radius", "1", "--out", "/nonexistent-dir/x.json"}).code == 2);
}

TEST_CASE("output file") {
  const auto path = std::filesystem::temp_directory_path() / "taxicab_cli_test.svg";
  std::filesystem::remove(path);
  const auto r = run({"render", "--family", "circle", "--radius", "1", "--out", path.string()});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  CHECK(count(read_file(path), "<path") == 1);
  std::filesystem::remove(path);
}

TEST_CASE("render") {
  const auto circle = run({"render", "--family", "circle", "--radius", "1"});
  REQUIRE(circle.code == 0);
  CHECK(count(circle.out, "<path") == 1);
  CHECK(count(circle.out, " L") == 3);  // four vertices
  CHECK(count(circle.out, " Z\"") == 1);
  CHECK(circle.out.find("version=\"1.1\"") != std::string::npos);

  const auto tri = run({"render", "--family", "trifocal", "--sum", "4"});
  CHECK(count(tri.out, "<path") == 1);
  CHECK(count(tri.out, " L") == 7);
  CHECK(count(tri.out, "class=\"focus\"") == 3);

  const auto hyp = run({"render", "--family", "hyperbola", "--foci", "0,0;4,2", "--gamma", "-4", "--bbox",
                        "-2,-2,6,4", "--resolution", "64"});
  REQUIRE(hyp.code == 0);
  CHECK(count(hyp.out, "<path") >= 1);
  CHECK(hyp.out.find("viewBox=\"-2 -4 8 6\"") != std::string::npos);

  const auto again = run({"render", "--family", "hyperbola", "--foci", "0,0;4,2", "--gamma", "-4", "--bbox",
                          "-2,-2,6,4", "--resolution", "64"});
  CHECK(again.out == hyp.out);
}

TEST_CASE("golden reports") {
  const std::filesystem::path dir = TAXICAB_GOLDEN_DIR;
  const std::vector<std::pair<std::string, std::vector<std::string>>> cases{
      {"classify_ellipse.json", {"classify", "--family", "ellipse", "--foci", "0,0;2,0", "--gamma", "-4"}},
      {"measure_trifocal.json", {"measure", "--family", "trifocal", "--sum", "3"}},
      {"measure_circle.json", {"measure", "--family", "circle", "--radius", "1"}},
      {"fermat_rectangle.json", {"fermat", "--foci", "0,0;2,1"}},
      {"render_trifocal.svg", {"render", "--family", "trifocal", "--sum", "4"}},
  };
  for (const auto& [file, args] : cases) {
    INFO(file);
    const auto r = run(args);
    CHECK(r.code == 0);
    CHECK(r.out == read_file(dir / file));
  }
}
