#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "mapalg/cli.hpp"
#include "mapalg/constructions.hpp"
#include "mapalg/errors.hpp"

using namespace mapalg;

namespace {

struct Result {
  int code;
  std::string out;
  json report;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  json j;
  if (!out.str().empty() && out.str().front() == '{') j = json::parse(out.str());
  return {code, out.str(), j};
}

std::string verdict(const json& report, const std::string& name) {
  for (const json& c : report["checks"]) {
    if (c["name"] == name) return c["verdict"];
  }
  return "missing";
}

std::filesystem::path scratch(const std::string& name) {
  auto p = std::filesystem::temp_directory_path() / "mapalg_cli_test" / name;
  std::filesystem::remove_all(p);
  return p;
}

bool same_cells(const SimplicialSet& x, const SimplicialSet& y) {
  if (x.size() != y.size() || x.basepoint() != y.basepoint() || x.dim_cap() != y.dim_cap()) return false;
  for (CellId c = 0; c < x.size(); ++c) {
    if (x.cell(c).dim != y.cell(c).dim || x.cell(c).faces != y.cell(c).faces) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("catalog expressions") {
  CHECK(isomorphic(parse_catalog("sphere 2"), sphere(2)));
  CHECK(isomorphic(parse_catalog("s1"), sphere(1)));
  CHECK(parse_catalog("pt")->size() == 1);
  CHECK(parse_catalog("point()")->size() == 1);
  CHECK(isomorphic(parse_catalog("susp(s1, 1)"), suspension(sphere(1), 1)));
  CHECK(isomorphic(parse_catalog("smash(s0, boundary(2))"), boundary(2)));
  CHECK(isomorphic(parse_catalog("halfsmash(s1, delta(0))"), sphere(1)));
  CHECK(parse_catalog("product(delta(1), delta(1))")->count(2) == 2);
  CHECK(parse_catalog("wedge(s1, s1, s2)")->count(1) == 2);
  for (const char* bad : {"", "sphere(", "wedge()", "torus", "s1 s1", "susp(s1,", "boundary(0)"}) {
    CHECK_THROWS_AS(parse_catalog(bad), ParseError);
  }
}

TEST_CASE("interchange round trip") {
  for (const char* e : {"pt", "s0", "s2", "delta(2)", "boundary(3)", "wedge(s1,s2)", "product(s1,s1)", "susp(s1,1)",
                        "smash(s1,s1)"}) {
    SetPtr x = parse_catalog(e);
    const json j = object_to_json(*x);
    SetPtr y = object_from_json(j);
    CHECK(same_cells(*x, *y));
    CHECK(object_to_json(*y) == j);
    CHECK(object_from_json(json::parse(j.dump())) != nullptr);
  }
  auto w = wedge({sphere(1), sphere(1)});
  const json m = map_to_json(w.legs[1], "S1", "W");
  CHECK(map_from_json(m, sphere(1), w.space) == w.legs[1]);
}

TEST_CASE("interchange rejects malformed input") {
  const json ok = object_to_json(*sphere(2));
  auto broken = [&](auto&& edit) {
    json j = ok;
    edit(j);
    return j;
  };
  // The 2-cell's faces are s_0 of the vertex; make the word non-decreasing.
  CHECK_THROWS_AS(object_from_json(broken([](json& j) { j["cells"][1]["faces"][0]["degens"] = {0, 0}; })), ParseError);
  CHECK_THROWS_AS(object_from_json(broken([](json& j) { j["cells"][1]["faces"][0]["degens"] = {0, 1}; })), ParseError);
  CHECK_THROWS_AS(object_from_json(broken([](json& j) { j["cells"][1]["faces"][0]["target"] = "nope"; })), ParseError);
  CHECK_THROWS_AS(object_from_json(broken([](json& j) { j["cells"][1]["faces"].erase(0); })), ParseError);
  CHECK_THROWS_AS(object_from_json(broken([](json& j) { j.erase("cells"); })), ParseError);
  CHECK_THROWS_AS(object_from_json(broken([](json& j) { j["basepoint"] = j["cells"][1]["id"]; })), ParseError);
  CHECK_THROWS_AS(object_from_json(broken([](json& j) { j["dim_cap"] = 1; })), ParseError);
  // Cells out of dimension order are sorted.
  json shuffled = object_to_json(*sphere(1));
  std::swap(shuffled["cells"][0], shuffled["cells"][1]);
  CHECK(isomorphic(object_from_json(shuffled), sphere(1)));
}

TEST_CASE("build writes a valid object") {
  const auto path = scratch("s2.json");
  auto r = run({"build", "sphere", "2", "--out", path.string()});
  CHECK(r.code == cli::kOk);
  CHECK(verdict(r.report, "validate") == "pass");
  REQUIRE(std::filesystem::exists(path));
  SetPtr x = load_object(path.string());
  CHECK(validate(*x).empty());
  CHECK(isomorphic(x, sphere(2)));
  // The written file loads as an input to other commands.
  auto m = run({"map-space", "--A", "s1", "--Y", path.string()});
  CHECK(m.code == cli::kOk);
  CHECK(m.report["data"]["counts"][0] == 1);
}

TEST_CASE("map-space counts") {
  auto r = run({"map-space", "--A", "s1", "--Y", "s1", "--levels", "1"});
  CHECK(r.code == cli::kOk);
  CHECK(r.report["data"]["counts"][0] == 2);
  CHECK(r.report["caps"]["levels"] == 1);
  CHECK(r.report["caps"]["dim_cap"] == 3);
  CHECK(r.report["caps"]["sigma_max"] == 1);
  CHECK(r.report["caps"]["budget"] == 10000000);
  CHECK(r.report["timing_ms"].is_null());
}

TEST_CASE("law suites") {
  auto comonad = run({"check-laws", "--suite", "comonad", "--A", "s1", "--Y", "s1"});
  CHECK(comonad.code == cli::kOk);
  CHECK(comonad.report["checks"].size() == 3);
  auto adj = run({"check-laws", "--suite", "adjunction"});
  CHECK(adj.code == cli::kOk);
  CHECK(adj.report["checks"].size() == 30);
  auto so = run({"check-laws", "--suite", "sigma_omega", "--A", "s0", "--Y", "s2"});
  CHECK(so.code == cli::kOk);
  auto alg = run({"check-laws", "--suite", "monad_algebra"});
  CHECK(alg.code == cli::kOk);
  auto mutated = run({"check-laws", "--suite", "monad_algebra", "--A", "s0", "--Y", "s1", "--mutate"});
  CHECK(mutated.code == cli::kLawViolation);
  CHECK(verdict(mutated.report, "monad_algebra[s0,s1].unit") == "fail");
  auto tower = run({"check-laws", "--suite", "tower_identities"});
  CHECK(tower.code == cli::kOk);
  CHECK(verdict(tower.report, "tower[stover,s1,s1].stage2.expand_p") == "pass");
  CHECK(verdict(tower.report, "tower[dold_lashof,s1,s1].stage2.expand_i") == "pass");
}

TEST_CASE("stover and tower outputs") {
  const auto st = scratch("ly.json");
  auto s = run({"stover", "--A", "s0", "--Y", "s0", "--sigma-max", "0", "--out", st.string()});
  CHECK(s.code == cli::kOk);
  std::ifstream in(st);
  const json j = json::parse(in);
  SetPtr ly = object_from_json(j["object"]);
  CHECK(validate(*ly).empty());
  CHECK(j["tags"].size() == ly->size());
  CHECK(is_valid(map_from_json(j["counit"], ly, sphere(0))));

  const auto dir = scratch("tower");
  auto t = run({"tower", "--kind", "dl", "--A", "s0", "--Y", "wedge(s1,s1)", "--stages", "1", "--sigma-max", "0",
                "--out", dir.string()});
  CHECK(t.code == cli::kOk);
  for (const char* f : {"Z0.json", "Z1.json", "e1.json", "i0.json", "report.json"}) CHECK(std::filesystem::exists(dir / f));
  for (const json& l : t.report["data"]["levels"]) {
    CHECK(l["injective"] == true);
    CHECK(l["surjective"] == true);
  }
  CHECK(verdict(t.report, "a_equivalence") == "conditional");
  auto cogroup = run({"stover", "--A", "s1", "--Y", "s1", "--sigma-max", "0", "--variant", "cogroup"});
  CHECK(cogroup.code == cli::kOk);
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == cli::kParseError);
  CHECK(run({"frobnicate"}).code == cli::kParseError);
  CHECK(run({"map-space", "--A", "s1"}).code == cli::kParseError);
  CHECK(run({"build", "sphere("}).code == cli::kParseError);
  CHECK(run({"check-laws", "--suite", "nope"}).code == cli::kParseError);
  CHECK(run({"tower", "--kind", "sideways", "--A", "s0", "--Y", "s1"}).code == cli::kParseError);
  CHECK(run({"map-space", "--A", "s1", "--Y", "wedge(s1,s1)", "--budget", "3"}).code == cli::kCapError);
  CHECK(run({"build", "s3", "--dim-cap", "2"}).code == cli::kCapError);
  CHECK(run({"build", "product(s2,s2)"}).code == cli::kCapError);
  CHECK(run({"check-laws", "--suite", "monad_algebra", "--mutate"}).code == cli::kLawViolation);
  CHECK(run({"build", "s1"}).code == cli::kOk);
}

TEST_CASE("reports are deterministic") {
  const std::vector<std::vector<std::string>> commands = {
      {"build", "wedge(s1,s2)"},
      {"map-space", "--A", "s1", "--Y", "wedge(s1,s1)"},
      {"map-space", "--A", "s1", "--Y", "s1", "--serial"},
      {"algebra", "eval", "--A", "s1", "--Y", "s2", "--B", "wedge(A,susp(A,1))", "--levels", "0"},
      {"algebra", "monad", "--A", "s1", "--Y", "s1"},
      {"stover", "--A", "s1", "--Y", "s1", "--sigma-max", "0"},
      {"tower", "--kind", "stover", "--A", "s1", "--Y", "s1", "--stages", "2", "--sigma-max", "0"},
      {"check-laws", "--suite", "comonad"},
      {"check-laws", "--suite", "monad_algebra", "--mutate"}};
  for (const auto& c : commands) {
    auto first = run(c), second = run(c);
    CHECK(first.out == second.out);
    CHECK(first.code == second.code);
  }
  // Parallel and serial enumeration agree byte for byte apart from the echo.
  auto par = run({"map-space", "--A", "s1", "--Y", "wedge(s1,s1)"});
  auto ser = run({"map-space", "--A", "s1", "--Y", "wedge(s1,s1)", "--serial"});
  CHECK(par.report["data"] == ser.report["data"]);
  auto timed = run({"build", "s1", "--timing"});
  CHECK(timed.report["timing_ms"].is_number());
}
