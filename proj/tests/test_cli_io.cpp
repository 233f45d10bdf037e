#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "sabar/cli.hpp"
#include "sabar/io.hpp"

using namespace sabar;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run sabar_run(std::vector<std::string> args) {
  args.insert(args.begin(), "sabar");
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  std::ostringstream out, err;
  const int code = cli_main(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& body) {
  const auto path = std::filesystem::temp_directory_path() / ("sabar_test_" + name);
  std::ofstream(path) << body;
  return path.string();
}

Filtration random_filtration(std::mt19937& rng) {
  const int verts = std::uniform_int_distribution<int>(1, 6)(rng);
  const int steps = std::uniform_int_distribution<int>(1, 5)(rng);
  std::map<Simplex, int> birth;
  for (int c = 0; c < 5; ++c) {
    std::set<int> vs;
    const int dim = std::uniform_int_distribution<int>(0, std::min(2, verts - 1))(rng);
    while (static_cast<int>(vs.size()) < dim + 1) vs.insert(std::uniform_int_distribution<int>(0, verts - 1)(rng));
    const Simplex s(vs.begin(), vs.end());
    const int b = std::uniform_int_distribution<int>(0, steps - 1)(rng);
    for (unsigned mask = 1; mask < (1u << s.size()); ++mask) {
      Simplex f;
      for (std::size_t k = 0; k < s.size(); ++k) {
        if (mask & (1u << k)) f.push_back(s[k]);
      }
      auto [it, fresh] = birth.emplace(f, b);
      if (!fresh) it->second = std::min(it->second, b);
    }
  }
  return Filtration({birth.begin(), birth.end()}, steps);
}

}  // namespace

TEST_CASE("parse_args") {
  const auto rips = parse_args({"barcode", "rips", "--points", "p.csv", "--max-dim", "1"});
  CHECK(rips.verb == Verb::BarcodeRips);
  CHECK(rips.max_dim == 1);
  CHECK(rips.input == "p.csv");

  const auto sub = parse_args({"barcode", "sublevel", "--formula", "(x <= 0)", "--poly", "x", "--radius", "9/4",
                               "--max-dim", "1", "--grid", "8", "--json", "out.json"});
  CHECK(sub.verb == Verb::BarcodeSublevel);
  CHECK(sub.radius == "9/4");
  CHECK(sub.grid_n == 8);
  CHECK(sub.json_out == std::optional<std::string>("out.json"));

  CHECK_THROWS_AS(parse_args({"barcode", "sublevel", "--poly", "x", "--radius", "1", "--max-dim", "1", "--grid", "8"}), UsageError);
  CHECK_THROWS_AS(parse_args({"barcode", "sublevel", "--formula", "(x <= 0)", "--poly", "x", "--radius", "1",
                              "--max-dim", "1", "--grid", "1"}),
                  UsageError);
  CHECK_THROWS_AS(parse_args({"barcode", "sublevel", "--formula", "(x <= 0)", "--poly", "x", "--radius", "1/0x",
                              "--max-dim", "1", "--grid", "4"}),
                  UsageError);
  CHECK_THROWS_AS(parse_args({"barcode", "rips", "--points", "p.csv", "--max-dim", "1", "--bogus"}), UsageError);
  CHECK_THROWS_AS(parse_args({"frobnicate"}), UsageError);
  CHECK_THROWS_AS(parse_args({}), UsageError);
  CHECK(parse_args({"--help"}).verb == Verb::Help);
}

TEST_CASE("barcode json") {
  CHECK(barcodes_json({}).dump() == "[]");
  Barcode b;
  b.p = 0;
  Bar bar;
  bar.birth_index = 0;
  bar.birth = FiltrationValue::at_index(0);
  bar.death_index = 1;
  bar.death = FiltrationValue::at_index(1);
  bar.mult = 2;
  b.bars.push_back(bar);
  const auto j = barcodes_json({b});
  REQUIRE(j.size() == 1);
  REQUIRE(j[0]["bars"].size() == 1);
  CHECK(j[0]["bars"][0]["mult"] == 2);
  CHECK(j[0]["bars"][0]["birth"] == 0);
  CHECK(j[0]["bars"][0]["death"] == 1);

  Filtration f({{{0}, 0}, {{1}, 0}, {{0, 1}, 1}}, 2);
  f.set_values({FiltrationValue::of(Rational(-1, 2)), FiltrationValue::of(encode_roots(UniPoly::parse("X^2 - 2"))[1], Rational(1, 1000))});
  const auto k = barcodes_json(barcodes(f, 0));
  CHECK(k[0]["bars"][0]["birth"] == "-1/2");
  CHECK(k[0]["bars"][0]["death"]["thom"]["poly"] == "X^2 - 2");
  CHECK(k[0]["bars"][0]["death"]["approx"].size() == 2);
  CHECK(k[0]["bars"][1]["death"] == "inf");
  CHECK(emit_barcode_json(barcodes(f, 1)) == emit_barcode_json(barcodes(f, 1)));
}

TEST_CASE("barcode svg") {
  Filtration f({{{0}, 0}, {{1}, 0}, {{0, 1}, 1}}, 2);
  const auto bs = barcodes(f, 1);
  const std::string svg = emit_barcode_svg(bs);
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(svg.find("<polygon") != std::string::npos);
  CHECK(svg == emit_barcode_svg(bs));
  CHECK(emit_barcode_svg({}).find("</svg>") != std::string::npos);
}

TEST_CASE("filtration file round trip") {
  std::mt19937 rng(4242);
  for (int t = 0; t < 50; ++t) {
    Filtration f = random_filtration(rng);
    if (t % 2 == 0) {
      std::vector<FiltrationValue> vals;
      for (int i = 0; i < f.steps(); ++i) vals.push_back(FiltrationValue::of(Rational(3 * i - 2, 7)));
      f.set_values(vals);
    }
    const std::string text = write_filtration(f);
    const Filtration g = read_filtration(text);
    CHECK(g.entries() == f.entries());
    CHECK(g.steps() == f.steps());
    CHECK(g.values().has_value() == f.values().has_value());
    if (f.values()) CHECK(*g.values() == *f.values());
    CHECK(write_filtration(g) == text);
  }
  // algebraic values
  const auto r = order_roots({UniPoly::parse("X^2 - 2"), UniPoly::parse("X^3 - X - 1")});
  Filtration f({{{0}, 0}, {{1}, 1}, {{0, 1}, 2}}, 3);
  f.set_values({FiltrationValue::of(r[0], Rational(1, 1000)), FiltrationValue::of(r[1], Rational(1, 1000)),
                FiltrationValue::of(r[2], Rational(1, 1000))});
  const Filtration g = read_filtration(write_filtration(f));
  CHECK(*g.values() == *f.values());
  CHECK(write_filtration(g) == write_filtration(f));
}

TEST_CASE("filtration file errors") {
  CHECK_THROWS_AS(read_filtration("0 0\n"), ParseError);
  CHECK_THROWS_AS(read_filtration("filtration v1\n0 0 1\n"), ParseError);
  CHECK_THROWS_AS(read_filtration("filtration v1\n1 0\n1 1\n0 0 1\n"), ParseError);
  CHECK_THROWS_AS(read_filtration("filtration v1\n0 a\n"), ParseError);
  CHECK_THROWS_AS(read_filtration("filtration v1\n0 0\nvalue 0 x\n"), ParseError);
  CHECK_THROWS_AS(read_filtration("filtration v1\n0 0\n1 1\nvalue 0 1\nvalue 1 1\n"), ParseError);
  CHECK_THROWS_AS(read_filtration("filtration v1\n0 0\nvalue 0 {\"poly\": \"X^2-2\", \"der_signs\": [0, 1, 1], \"interval\": [\"-2\", \"0\"]}\n"),
                  ParseError);
  const auto f = read_filtration("# comment\nfiltration v1\n\n0 0   # a vertex\n0 1\n1 1 0\n");
  CHECK(f.steps() == 2);
  CHECK(f.entries().size() == 3);
}

TEST_CASE("points csv") {
  const auto pts = read_points_csv("0,0\n1/2, -3\n\n2,7/3\n");
  REQUIRE(pts.size() == 3);
  CHECK(pts[1][0] == Rational(1, 2));
  CHECK(pts[2][1] == Rational(7, 3));
  CHECK_THROWS_AS(read_points_csv("0,0\n1\n"), ParseError);
  CHECK_THROWS_AS(read_points_csv("0,zz\n"), ParseError);
}

TEST_CASE("cli exit codes") {
  const auto file = temp_file("edge.txt", "filtration v1\n0 0\n0 1\n1 0 1\n");
  const auto ok = sabar_run({"barcode", "simplicial", file, "--max-dim", "0"});
  CHECK(ok.code == kOk);
  CHECK(ok.out == "H0: 2 bars\n  [0, 1)\n  [0, inf)\n");

  CHECK(sabar_run({"barcode", "sublevel", "--poly", "x"}).code == kUsage);
  CHECK(sabar_run({"barcode", "simplicial", "/nonexistent/file"}).code == kContract);
  const auto bad = temp_file("bad.txt", "filtration v1\n0 0 1\n");
  CHECK(sabar_run({"barcode", "simplicial", bad}).code == kContract);
  CHECK(sabar_run({"formula", "make-closed", "--formula", "(X > 0)"}).code == kContract);
  CHECK(sabar_run({"barcode", "sublevel", "--formula", "(x^2+y^2-1 < 0)", "--poly", "x", "--radius", "4", "--max-dim",
                   "1", "--grid", "8"})
            .code == kContract);
  CHECK(sabar_run({"barcode", "sublevel", "--formula", "(a+b+c+d <= 0)", "--poly", "a", "--radius", "4", "--max-dim",
                   "1", "--grid", "4"})
            .code == kContract);

  const auto closed = sabar_run({"formula", "make-closed", "--formula", "(X^2*(X-1) > 0) & ((X >= 2) | (X <= 0))"});
  CHECK(closed.code == kOk);
  CHECK(closed.out.find("realization: [2, +inf)") != std::string::npos);

  const auto roots = sabar_run({"roots", "order", "--polys", "X^2-2; X^2-3"});
  CHECK(roots.code == kOk);
  CHECK(std::count(roots.out.begin(), roots.out.end(), '\n') == 4);
}

TEST_CASE("cli rips and sublevel") {
  const auto pts = temp_file("square.csv", "0,0\n1,0\n1,1\n0,1\n");
  const auto r = sabar_run({"barcode", "rips", "--points", pts, "--max-dim", "1", "--json", "-"});
  CHECK(r.code == kOk);
  const auto j = nlohmann::json::parse(r.out);
  REQUIRE(j.size() == 2);
  REQUIRE(j[1]["bars"].size() == 1);
  CHECK(j[1]["bars"][0]["birth"] == "1");
  CHECK(j[1]["bars"][0]["death"] == "2");

  const auto d = sabar_run({"barcode", "sublevel", "--formula", "(x^2+y^2-1 <= 0)", "--poly", "x", "--radius", "4",
                            "--max-dim", "1", "--grid", "32", "--json", "-"});
  CHECK(d.code == kOk);
  const auto dj = nlohmann::json::parse(d.out);
  REQUIRE(dj[0]["bars"].size() == 1);
  CHECK(dj[0]["bars"][0]["birth"]["text"] == "-1");
  CHECK(dj[0]["bars"][0]["death"] == "inf");

  const auto lv = sabar_run({"barcode", "sublevel", "--formula", "(x^2+y^2-1 <= 0)", "--poly", "x", "--radius", "4",
                             "--max-dim", "1", "--grid", "16", "--levels", "-1/2, 0, 1/2"});
  CHECK(lv.code == kOk);
  CHECK(lv.out.find("[-1/2, inf)") != std::string::npos);

  const auto svg_path = std::filesystem::temp_directory_path() / "sabar_test_out.svg";
  const auto s1 = sabar_run({"barcode", "rips", "--points", pts, "--max-dim", "1", "--svg", svg_path.string()});
  CHECK(s1.code == kOk);
  CHECK(std::filesystem::file_size(svg_path) > 0);
}
