#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "galcrem/cli.hpp"
#include "galcrem/report.hpp"
#include "support.hpp"

using namespace gt;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run_command(args, out, err);
  return {code, out.str(), err.str()};
}

// A scratch file removed when the test ends.
class TempFile {
 public:
  TempFile(const std::string& name, const std::string& text)
      : path_(std::filesystem::temp_directory_path() / ("galcrem_test_" + name)) {
    std::ofstream(path_) << text;
  }
  ~TempFile() { std::filesystem::remove(path_); }
  std::string path() const { return path_.string(); }

 private:
  std::filesystem::path path_;
};

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("built-in scenarios verify") {
    for (const auto& name : builtin_names()) {
      CAPTURE(name);
      Run r = run({"verify", name});
      CHECK(r.code == 0);
      CHECK(r.err.empty());
    }
    Run missing = run({"verify", "no-such-scenario"});
    CHECK(missing.code == 2);
    CHECK(contains(missing.err, "error:"));
  }

  TEST_CASE("galois test and extend on a conic file") {
    TempFile f("conic.json", R"({"field": "Q", "curve": {"implicit": "X^2 - Y*Z"}})");
    Run t = run({"--json", "galois", "test", f.path(), "--point", "1,0,0"});
    REQUIRE(t.code == 0);
    auto j = nlohmann::json::parse(t.out);
    CHECK(j["degree"] == 2);
    CHECK(j["galois"] == true);

    Run e = run({"--json", "galois", "extend", f.path(), "--point", "1,0,0"});
    REQUIRE(e.code == 0);
    auto je = nlohmann::json::parse(e.out);
    REQUIRE(je["extensions"].size() == 1);
    CHECK(je["extensions"][0]["verdict"] == "jonquieres");

    Run bad = run({"galois", "extend", f.path(), "--point", "1,0,0", "--generator", "5"});
    CHECK(bad.code == 1);
  }

  TEST_CASE("input errors") {
    TempFile f("zero_point.json", R"({"field": "Q", "curve": {"implicit": "X^2 - Y*Z"}, "point": [0, 0, 0]})");
    Run r = run({"galois", "test", f.path()});
    CHECK(r.code == 2);
    CHECK(contains(r.err, "not a projective point"));

    Run j = run({"--json", "galois", "test", f.path()});
    CHECK(j.code == 2);
    auto doc = nlohmann::json::parse(j.out);
    CHECK(doc["exit_code"] == 2);

    TempFile g("bad_poly.json", R"({"field": "Q", "curve": {"implicit": "X^2 - Y*"}})");
    CHECK(run({"curve", "info", g.path()}).code == 2);
    TempFile h("bad_field.json", R"({"field": "F_9", "curve": {"implicit": "X"}})");
    CHECK(run({"curve", "info", h.path()}).code == 2);
    CHECK(run({"curve", "info", "/nonexistent/file.json"}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"galois", "test", f.path(), "--point", "1,2"}).code == 2);
  }

  TEST_CASE("report contents") {
    Run q = run({"--json", "verify", "quartic-i"});
    REQUIRE(q.code == 0);
    CHECK(contains(q.out, "\"jonquieres\": false"));
    CHECK(contains(q.out, "\"cremona\": true"));

    Run s = run({"--json", "verify", "quintic-zeta5"});
    REQUIRE(s.code == 0);
    auto j = nlohmann::json::parse(s.out);
    CHECK(j["extendable_elements"] == nlohmann::json::array({"identity"}));
  }

  TEST_CASE("rendering") {
    CHECK(render_report(Report{}, ReportFormat::json) == "{}\n");
    Report r;
    r.data["degree"] = 3;
    CHECK(contains(render_report(r, ReportFormat::human), "degree: 3"));
    r.failures.push_back("mismatch");
    CHECK(r.exit_code() == exit_code::failure);
    CHECK(contains(render_report(r, ReportFormat::human), "mismatch"));
  }

  TEST_CASE("output is deterministic") {
    for (const auto& name : builtin_names()) {
      Run a = run({"--json", "verify", name});
      Run b = run({"--json", "verify", name});
      CHECK(a.out == b.out);
    }
  }

  TEST_CASE("cremona reduce") {
    Run r = run({"--json", "cremona", "reduce", "quartic-i"});
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["chain"]["end_degree"] == 2);
    CHECK(j["pairing"]["value"] == -2);

    TempFile f("cubic.json", R"({"field": "Q", "curve": {"param": ["u*v^2 + u^2*v", "u^3", "v^3"]}})");
    Run g = run({"--json", "cremona", "reduce", f.path()});
    REQUIRE(g.code == 0);
    CHECK(nlohmann::json::parse(g.out)["chain"]["source"] == "greedy");
  }

  TEST_CASE("scenario files") {
    Scenario obj = scenario_from_json_text(
        R"({"field": {"kind": "cyclotomic", "n": 3}, "curve": {"param": ["u*v^2 + u^2*v", "u^3", "v^3"]},
            "point": "[1:0:0]", "generators": [[["z", "0"], ["0", "1"]]]})");
    CHECK(obj.field.descriptor() == FieldDescriptor::cyclotomic(3));
    CHECK(obj.curve.degree() == 3);
    REQUIRE(obj.point);
    CHECK(*obj.point == pt(obj.field, "1", "0", "0"));
    REQUIRE(obj.generators.size() == 1);
    CHECK(obj.generators[0] == LineMobius::diagonal(obj.field.generator(), obj.field.one()));

    CHECK(parse_field("Q(zeta_8)").descriptor() == FieldDescriptor::cyclotomic(8));
    CHECK(parse_field("F_7").descriptor() == FieldDescriptor::prime(7));
    CHECK(parse_field("QQ").descriptor() == FieldDescriptor::rational());
    CHECK(field_name(cyc(5)) == "Q(zeta_5)");
    CHECK_THROWS_AS(parse_field("R"), ScenarioError);
    CHECK_THROWS_AS(scenario_from_json_text("{"), ScenarioError);
    CHECK_THROWS_AS(scenario_from_json_text(R"({"field": "Q"})"), ScenarioError);

    CHECK(parse_point("1,2,3", Q()) == pt(Q(), "1", "2", "3"));
    CHECK(parse_point("[z:1:0]", cyc(4)) == pt(cyc(4), "z", "1", "0"));
  }

  TEST_CASE("conjugated scenarios verify") {
    for (const auto& name : builtin_names()) {
      CAPTURE(name);
      Scenario s = builtin_scenario(name);
      Scenario moved = conjugate(s, random_invertible(s.field, 77));
      Report r = verify_scenario(moved, RunOptions{});
      CHECK(r.failures.empty());
      CHECK(r.exit_code() == exit_code::ok);
    }
  }
}
