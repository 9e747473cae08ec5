#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "hecke_lab/cli.hpp"
#include "hecke_lab/errors.hpp"
#include "hecke_lab/ext_weyl.hpp"
#include "support.hpp"

using namespace hecke_lab;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out, err;
  Json json() const { return Json::parse(out); }
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& text) {
  const fs::path dir = fs::temp_directory_path() / "hecke_lab_cli_tests";
  fs::create_directories(dir);
  const fs::path p = dir / name;
  std::ofstream(p) << text;
  return p.string();
}

std::string case_file(const std::string& name, const Json& j) { return write_temp(name + ".json", j.dump()); }

}  // namespace

TEST_CASE("build reports") {
  auto r = run({"build", "--case", case_file("a2", {{"type", "A"}, {"rank", 2}, {"decoration", {1}}, {"lattice", "coweight"}})});
  REQUIRE(r.code == 0);
  CHECK(r.json()["result"]["omega"]["structure"] == "Z/3Z");
  CHECK(r.json()["result"]["m"] == 1);
  r = run({"build", "--case", case_file("g2", {{"type", "G"}, {"rank", 2}, {"decoration", {1, 1}}})});
  CHECK(r.json()["result"]["omega"]["structure"] == "{1}");
  CHECK(r.json()["result"]["m"] == 2);
  r = run({"build", "--case", case_file("c2bad", {{"type", "C"}, {"rank", 2}, {"decoration", {1, 2}}})});
  CHECK(r.code == 2);
  CHECK(r.json()["error"]["code"] == "DecorationNotClassConstant");
}

TEST_CASE("characters reports") {
  auto count = [](const Json& j) { return j["result"]["counts"]; };
  auto r = run({"characters", "--case", case_file("a1eq", {{"type", "A"}, {"rank", 1}, {"decoration", {1, 1}}})});
  REQUIRE(r.code == 0);
  CHECK(count(r.json())["generic"] == 4);
  CHECK(count(r.json())["extending"] == 2);
  r = run({"characters", "--case", case_file("a1ne", {{"type", "A"}, {"rank", 1}, {"decoration", {1, 2}}})});
  CHECK(count(r.json())["extending"] == 4);
  r = run({"characters", "--case", case_file("f4", {{"type", "F"}, {"rank", 4}, {"decoration", {1, 1}}})});
  CHECK(count(r.json())["generic"] == 4);
  CHECK(count(r.json())["mod_p"] == 32);
}

TEST_CASE("classify reports") {
  auto r = run({"classify", "--case", case_file("c3", {{"type", "C"}, {"rank", 3}, {"decoration", {2, 1, 1}}})});
  REQUIRE(r.code == 0);
  CHECK(r.json()["result"]["verdict"] == "Character1Dim");
  CHECK(r.json()["result"]["r"] == 1);
  const Json cert = r.json()["result"]["certificate"];
  CHECK(cert["relations"] == "pass");
  CHECK(cert["discrete"]["method"] == "exponent-table");
  CHECK(cert["supersingular_mod_p"]["supersingular"] == true);
  CHECK(cert["supersingular_mod_p"]["orbits"][0].contains("nilpotency_degree"));
  r = run({"classify", "--case", case_file("c4", {{"type", "C"}, {"rank", 4}, {"decoration", {1, 2, 2}}})});
  CHECK(r.json()["result"]["verdict"] == "Induced2Dim");
  CHECK(r.json()["result"]["r"] == 2);
  r = run({"classify", "--case", case_file("d4", {{"type", "D"}, {"rank", 4}, {"decoration", {1}}})});
  CHECK(r.json()["result"]["verdict"] == "ReflectionTwist");
  CHECK(r.json()["result"]["certificate"]["discrete"]["note"] == "cited, not recomputed");
  CHECK(r.json()["result"]["certificate"]["components"].size() == 5);
  r = run({"classify", "--case", case_file("a2x", {{"type", "A"}, {"rank", 2}})});
  CHECK(r.code == 0);
  CHECK(r.json()["result"]["verdict"] == "ExcludedTypeA");
  r = run({"classify", "--case", case_file("g2b", {{"type", "G"}, {"rank", 2}, {"decoration", {1, 2}}})});
  CHECK(r.code == 3);
  CHECK(r.json()["error"]["code"] == "UnhandledCase");
}

TEST_CASE("verify suites") {
  auto r = run({"verify", "--suite", "default"});
  CHECK(r.code == 0);
  CHECK(r.json()["summary"]["failed"] == 0);
  CHECK(r.json()["summary"]["cases"] == Json::parse(cli::default_suite_text())["cases"].size());
  const Json c5{{"cases",
                 {{{"name", "C5 expecting r=1"},
                   {"case", {{"type", "C"}, {"rank", 5}, {"decoration", {1, 2, 2}}}},
                   {"expect", {{"verdict", "Character1Dim"}, {"r", 1}}}}}}};
  r = run({"verify", "--suite", write_temp("c5.json", c5.dump())});
  CHECK(r.code == 1);
  CHECK(r.json()["results"][0]["observed"]["r"] == 2);
  r = run({"verify", "--suite", write_temp("empty.json", R"({"cases": []})")});
  CHECK(r.code == 0);
  CHECK(r.json()["summary"]["cases"] == 0);
  CHECK(r.err.find("warning") != std::string::npos);
  const Json expect_error{{"cases",
                           {{{"case", {{"type", "C"}, {"rank", 2}, {"decoration", {1, 2}}}},
                             {"expect", {{"error", "DecorationNotClassConstant"}}}}}}};
  CHECK(run({"verify", "--suite", write_temp("err.json", expect_error.dump())}).code == 0);
}

TEST_CASE("reports are byte-stable across runs and thread counts") {
  const std::string suite = write_temp("small.json", R"({"cases": [
    {"case": {"type": "C", "rank": 2, "decoration": [1, 1, 1]}, "expect": {"r": 2}},
    {"case": {"type": "G", "rank": 2}, "expect": {"r": 1}},
    {"case": {"type": "D", "rank": 4}, "expect": {"verdict": "ReflectionTwist"}},
    {"case": {"type": "A", "rank": 3}, "expect": {"verdict": "ExcludedTypeA"}}]})");
  const Run a = run({"verify", "--suite", suite});
  setenv("HECKE_LAB_THREADS", "3", 1);
  const Run b = run({"verify", "--suite", suite, "--seed", "99"});
  unsetenv("HECKE_LAB_THREADS");
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.json()["input_hash"].get<std::string>().size() == 16);
  const Run c = run({"classify", "--suite", suite});
  const Run d = run({"classify", "--suite", suite});
  CHECK(c.out == d.out);
}

TEST_CASE("invalid input") {
  CHECK(run({"classify"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"classify", "--case", write_temp("broken.json", "{not json")}).code == 2);
  CHECK(run({"classify", "--case", "/nonexistent/case.json"}).code == 2);
  const std::string c2 = case_file("c2p", {{"type", "C"}, {"rank", 2}});
  CHECK(run({"classify", "--case", c2, "--p", "4"}).code == 2);
  CHECK(run({"classify", "--case", case_file("badtype", {{"type", "Q"}, {"rank", 2}})}).json()["error"]["code"] == "InvalidType");
  CHECK(run({"classify", "--case", case_file("badrank", {{"type", "E"}, {"rank", 9}})}).code == 2);
  CHECK(run({"classify", "--case", case_file("strrank", {{"type", "E"}, {"rank", "6"}})}).code == 2);
  const std::string out = (fs::temp_directory_path() / "hecke_lab_cli_tests" / "report.json").string();
  const Run r = run({"build", "--case", c2, "--json", out});
  CHECK(r.code == 0);
  std::ifstream in(out);
  CHECK(Json::parse(in)["result"]["m"] == 3);
}

TEST_CASE("element serialization round trips") {
  auto g = testing::rng(41);
  for (auto [t, l] : std::vector<std::pair<char, int>>{{'A', 2}, {'C', 3}, {'G', 2}}) {
    auto d = build_root_datum(t, l);
    HeckeAlgebra h(d);
    for (int trial = 0; trial < 20; ++trial) {
      const ExtWeylElt w = d->weyl().from_word(d->weyl().identity(), testing::random_word(g, d->num_nodes(), 7));
      const Json j = to_json(w);
      CHECK(j.contains("translation"));
      CHECK(j["matrix"].size() == static_cast<std::size_t>(l));
      CHECK(ext_weyl_from_json(*d, j) == w);
      const HeckeElt x = h.mul(h.basis(w), h.generator(0)) - h.one();
      CHECK(hecke_from_json(h, Json::parse(to_json(x).dump())) == x);
    }
  }
  auto a1 = build_root_datum('A', 1);
  CHECK(to_json(Laurent::monomial(2, -1) + 1).dump() == R"({"-1":2,"0":1})");
  CHECK_THROWS_AS(ext_weyl_from_json(*a1, Json{{"translation", {0}}, {"matrix", {{2}}}}), Error);
  CHECK_THROWS_AS(laurent_from_json(Json{{"x", 1}}), Error);
}
