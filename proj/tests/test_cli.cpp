#include "matchent/catalog.hpp"
#include "matchent/cli.hpp"

#include <doctest.h>
#include <nlohmann/json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace matchent;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string write_file(const std::string& name, const std::string& text) {
  const fs::path dir = fs::temp_directory_path() / "matchent_cli_test";
  fs::create_directories(dir);
  const fs::path path = dir / name;
  std::ofstream(path) << text;
  return path.string();
}

std::string graph_file(const std::string& name, const Graph& g) { return write_file(name, write_edge_list(g)); }

}  // namespace

TEST_CASE("poly and roots") {
  const auto c4 = graph_file("c4.el", cycle_graph(4));
  const auto r = call({"poly", c4});
  CHECK(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["v"] == 4);
  CHECK(j["m"].dump() == "[1,4,2]");
  const auto roots = call({"roots", c4});
  CHECK(roots.code == 0);
  CHECK(roots.out.find("1.84") != std::string::npos);
  CHECK(call({"poly", c4, "--csv"}).out.find("k,") == 0);
}

TEST_CASE("verify") {
  const auto c6 = graph_file("c6.el", cycle_graph(6));
  const auto r = call({"verify", "lmc", c6, "--k", "2"});
  CHECK(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["margin"]["num"] == "17");
  CHECK(j["margin"]["den"] == "9");
  CHECK(j["verdict"] == "pass");
  CHECK(j["exact"] == true);

  const auto k33 = graph_file("k33.el", complete_bipartite(3, 3));
  for (const std::string claim : {"schrijver", "lmc", "lmc-conjecture", "direct", "dominance", "integral", "energy",
                                  "hoeffding", "lift-lemma"})
    CHECK_MESSAGE(call({"verify", claim, k33}).code == 0, claim);
  CHECK(call({"verify", "darroch", k33, "--t", "1"}).code == 0);
  CHECK(call({"verify", "biregular", graph_file("k23.el", complete_bipartite(2, 3))}).code == 0);
  CHECK(call({"verify", "tightness", "--d", "3", "--n", "5"}).code == 0);
  // Domain errors are input errors.
  CHECK(call({"verify", "schrijver", graph_file("c5.el", cycle_graph(5))}).code == 2);
  CHECK(call({"verify", "nonsense", k33}).code == 2);
}

TEST_CASE("tree and entropy") {
  const auto r = call({"tree", "--d", "3", "--p", "0.5"});
  CHECK(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["t"].get<double>() == doctest::Approx(5.0 / 9));
  CHECK(j["S"].get<double>() == doctest::Approx(2.314814814814815));
  const auto e = call({"entropy", graph_file("c4.el", cycle_graph(4)), "--grid", "0.1:0.5:0.1"});
  CHECK(e.code == 0);
  CHECK(json::parse(e.out).size() == 5);
}

TEST_CASE("usage errors") {
  CHECK(call({}).code == 2);
  CHECK(call({"frobnicate"}).code == 2);
  CHECK(call({"poly", "--bogus"}).code == 2);
  CHECK(call({"poly", "/nonexistent/file.el"}).code == 2);
  CHECK(call({"poly", write_file("bad.el", "0 x\n")}).code == 2);
  CHECK(call({"--help"}).code == 0);
}

TEST_CASE("seeded commands are byte-identical") {
  const auto c6 = graph_file("c6.el", cycle_graph(6));
  const auto a = call({"lift", c6, "--seed", "9", "--target-girth", "12"});
  const auto b = call({"lift", c6, "--seed", "9", "--target-girth", "12"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  const auto x = call({"random", "--d", "3", "--n", "4", "--k", "2", "--samples", "50", "--seed", "3"});
  const auto y = call({"random", "--d", "3", "--n", "4", "--k", "2", "--samples", "50", "--seed", "3"});
  CHECK(x.code == 0);
  CHECK(x.out == y.out);
  const auto spec = write_file("spec.json", R"({"kind":"biregular","a":3,"b":2,"n":2,"k":2,"samples":40,"seed":1})");
  const auto s = call({"random", "--spec", spec});
  CHECK(s.code == 0);
  CHECK(json::parse(s.out)["a"] == 3);
}

TEST_CASE("report") {
  const auto empty = report({}, "all");
  CHECK(empty.certificates == 0);
  CHECK(empty.failed == 0);
  CHECK(call({"report", "all"}).code == 0);

  const auto c6 = graph_file("c6.el", cycle_graph(6));
  const auto bad = write_file("bad.el", "0 x\n");
  const auto mixed = report({c6, bad, "/nonexistent.el"}, "lmc");
  CHECK(mixed.failed == 0);
  CHECK(mixed.warnings == 2);
  CHECK(mixed.certificates == 8);
  const json j = json::parse(mixed.json);
  CHECK(j["graphs"].size() == 3);
  CHECK(j["graphs"][0]["path"] == c6);
  CHECK(j["graphs"][1].contains("error"));
  CHECK(report({c6, bad, "/nonexistent.el"}, "lmc").json == mixed.json);

  std::vector<std::string> paths;
  for (const auto& [name, g] : regular_catalog()) paths.push_back(graph_file(name + ".el", g));
  for (const auto& [name, g] : biregular_catalog()) paths.push_back(graph_file(name + ".el", g));
  const auto all = report(paths, "all");
  CHECK(all.failed == 0);
  CHECK(all.certificates > 500);
  CHECK_THROWS(report({c6}, "nonsense"));
}
