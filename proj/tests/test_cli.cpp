#include <filesystem>
#include <fstream>
#include <regex>
#include <set>
#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "okdh/builtin.hpp"
#include "okdh/io.hpp"
#include "okdh/plot.hpp"

using namespace okdh;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("okdh_cli_test_" + name);
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write(const fs::path& p, const std::string& text) { std::ofstream(p) << text; }

std::size_t count(const std::string& s, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = s.find(needle); pos != std::string::npos; pos = s.find(needle, pos + 1)) ++n;
  return n;
}

const std::vector<std::string> kCommands = {"vanishing-numbers", "measure", "limit-measure", "converge",
                                            "okounkov-body", "filtered-body", "restricted-volume",
                                            "verify-theorem5"};

std::vector<std::string> args_for(const std::string& cmd) {
  if (cmd == "vanishing-numbers" || cmd == "measure") return {cmd, "--m", "4"};
  if (cmd == "converge") return {cmd, "--m-list", "1,2,4"};
  return {cmd};
}

}  // namespace

TEST_CASE("converge CSV") {
  const auto r = run({"converge", "--example", "p1-point", "--m-list", "1,2,4"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "m,E_nu_m,E_nu_m_decimal,kolmogorov,kolmogorov_decimal\n"
        "1,1/2,0.50000000000000000000,1/2,0.50000000000000000000\n"
        "2,1/2,0.50000000000000000000,1/3,0.33333333333333333333\n"
        "4,1/2,0.50000000000000000000,1/5,0.20000000000000000000\n");
}

TEST_CASE("okounkov body JSON") {
  const auto dir = scratch("body");
  write(dir / "p2.json", R"({"type": "projective", "d": 2, "k": 1})");
  const auto r = run({"okounkov-body", "--model", (dir / "p2.json").string()});
  REQUIRE(r.code == 0);
  const auto j = Json::parse(r.out);
  CHECK(j["body"]["vertices"].size() == 3);
  CHECK(j["body"]["volume"] == "1/2");
}

TEST_CASE("exit codes and diagnostics") {
  const auto dir = scratch("errors");
  write(dir / "p2.json", R"({"type": "projective", "d": 2, "k": 1})");
  const std::string model = (dir / "p2.json").string();

  auto r = run({"converge", "--model", model, "--filtration", (dir / "missing.json").string(), "--m-list", "1"});
  CHECK(r.code == 1);
  CHECK(r.err.find("missing.json") != std::string::npos);

  write(dir / "neg.json", R"({"pieces": [{"a": ["1", "0"], "b": "-1"}]})");
  r = run({"limit-measure", "--model", model, "--filtration", (dir / "neg.json").string()});
  CHECK(r.code == 1);
  CHECK(r.err.find("vertex (0, 0)") != std::string::npos);

  write(dir / "bad.json", R"({"pieces": [{"a": ["1", "x"], "b": "0"}]})");
  r = run({"limit-measure", "--model", model, "--filtration", (dir / "bad.json").string()});
  CHECK(r.code == 1);
  CHECK(r.err.find("filtration.pieces[0].a[1]") != std::string::npos);

  write(dir / "half.json", R"({"type": "polytope", "d": 1, "vertices": [["0"], ["1/2"]]})");
  r = run({"okounkov-body", "--model", (dir / "half.json").string()});
  CHECK(r.code == 1);
  CHECK(r.err.find("1/2") != std::string::npos);

  write(dir / "flag.json", R"({"type": "projective", "d": 2, "k": 1, "flag_map": {"matrix": [[2, 0], [0, 1]]}})");
  r = run({"okounkov-body", "--model", (dir / "flag.json").string()});
  CHECK(r.code == 1);
  CHECK(r.err.find("flag_map") != std::string::npos);

  write(dir / "open.json", R"({"type": "polytope", "d": 1, "hrep": [{"a": ["1"], "b": "0"}]})");
  r = run({"okounkov-body", "--model", (dir / "open.json").string()});
  CHECK(r.code == 1);
  CHECK(r.err.find("model.hrep") != std::string::npos);

  write(dir / "garbage.json", "{not json");
  CHECK(run({"okounkov-body", "--model", (dir / "garbage.json").string()}).code == 1);

  CHECK(run({"measure", "--example", "p1-point", "--m", "0"}).code == 1);
  CHECK(run({"converge", "--example", "p1-point", "--m-list", "2,1"}).code == 1);
  CHECK(run({"converge", "--example", "p1-point", "--m-list", "1,x"}).code == 1);
  CHECK(run({"measure", "--example", "nope", "--m", "2"}).code == 1);
  CHECK(run({"restricted-volume", "--example", "p2-min"}).code == 1);
  CHECK(run({"restricted-volume", "--example", "p2-line", "--t", "2"}).code == 1);
  CHECK(run({"measure", "--example", "p1-point", "--m", "2", "--format", "xml"}).code == 1);
  CHECK(run({"frobnicate"}).code == 1);
  CHECK(run({}).code == 1);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("determinism and round trip") {
  for (const auto& ex : builtin_examples()) {
    for (const auto& cmd : kCommands) {
      if (!ex.divisorial && (cmd == "restricted-volume" || cmd == "verify-theorem5")) continue;
      const auto a = scratch("a");
      const auto b = scratch("b");
      const auto c = scratch("c");
      auto base = args_for(cmd);
      auto with = [&](std::vector<std::string> extra) {
        auto v = base;
        v.insert(v.end(), extra.begin(), extra.end());
        return v;
      };
      REQUIRE_MESSAGE(run(with({"--example", ex.name, "--out", a.string()})).code == 0, ex.name << " " << cmd);
      REQUIRE(run(with({"--example", ex.name, "--out", b.string()})).code == 0);
      const fs::path json = a / (cmd + ".json");
      REQUIRE(fs::exists(json));
      // the emitted JSON serves as both model and filtration input
      const auto again = run(with({"--model", json.string(), "--filtration", json.string(), "--out", c.string()}));
      REQUIRE_MESSAGE(again.code == 0, again.err);
      for (const auto& entry : fs::directory_iterator(a)) {
        const auto name = entry.path().filename();
        CHECK_MESSAGE(slurp(entry.path()) == slurp(b / name), ex.name << " " << name);
        CHECK_MESSAGE(slurp(entry.path()) == slurp(c / name), ex.name << " " << name);
      }
    }
  }
}

TEST_CASE("model files") {
  const auto dir = scratch("models");
  write(dir / "square.json",
        R"({"type": "polytope", "d": 2, "hrep": [{"a": ["1", "0"], "b": "0"}, {"a": ["-1", "0"], "b": "-1"},
             {"a": ["0", "1"], "b": "0"}, {"a": ["0", "-1"], "b": "-1"}]})");
  const auto sq = model_from_json(read_json_file(dir / "square.json"));
  CHECK(sq.h0(2) == 9);
  const auto rt = model_from_json(model_to_json(sq));
  CHECK(rt.polytope().vertices() == sq.polytope().vertices());
  const auto f = filtration_from_json(Json::parse(R"({"pieces": [{"a": [1, "1/2"]}]})"), sq);
  CHECK(f.pieces().front().slope[1] == Rational(1, 2));
  CHECK(f.pieces().front().offset == 0);
}

TEST_CASE("plots") {
  const auto p1x = builtin_example("p1-point").filtration;
  // delta_0: one stem at the origin
  const auto zero = WeightFiltration::zero(p1x.model());
  const std::string delta = render_svg({"", density_layers(limit_measure_nu(zero))});
  CHECK(count(delta, "class=\"stem\"") == 1);
  CHECK(delta.find("width=\"800\" height=\"600\"") != std::string::npos);

  // U[0,1]: every polyline vertex at the same height
  const std::string uniform = render_svg({"", density_layers(limit_measure_nu(p1x))});
  std::smatch match;
  REQUIRE(std::regex_search(uniform, match, std::regex("<polyline points=\"([^\"]*)\"")));
  std::set<std::string> heights;
  std::stringstream pts(match[1].str());
  std::string pt;
  std::size_t n = 0;
  while (pts >> pt) {
    heights.insert(pt.substr(pt.find(',') + 1));
    ++n;
  }
  CHECK(heights.size() == 1);
  CHECK(n == 102);  // two breakpoints plus 100 interior samples

  // nu_4 over nu: five stems of height 1/5
  Plot overlay{"", density_layers(limit_measure_nu(p1x))};
  overlay.layers.push_back(stems_layer(nu_m(p1x, 4)));
  CHECK(overlay.layers.back().points.size() == 5);
  for (const auto& p : overlay.layers.back().points) CHECK(p.y == Rational(1, 5));
  const std::string svg = render_svg(overlay);
  CHECK(count(svg, "class=\"stem\"") == 5);
  CHECK(svg.find(">1</text>") != std::string::npos);

  CHECK_THROWS_AS(render_svg({"", {}}), ValidationError);
  const auto square = RationalPolytope::from_vrep(2, {{0, 0}, {1, 1}, {1, 0}, {0, 1}});
  const auto body = body_layer(square, "#000", "");
  REQUIRE(body.points.size() == 4);
  // counterclockwise: every consecutive turn is a left turn
  for (std::size_t i = 0; i < 4; ++i) {
    const auto& a = body.points[i];
    const auto& b = body.points[(i + 1) % 4];
    const auto& c = body.points[(i + 2) % 4];
    CHECK((b.x - a.x) * (c.y - b.y) - (b.y - a.y) * (c.x - b.x) > 0);
  }
}
