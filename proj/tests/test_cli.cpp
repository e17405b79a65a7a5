#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ribbonrec/recursion.hpp"
#include "ribbonrec/ribbon_graph.hpp"
#include "ribbonrec/serialize.hpp"
#include "ribbonrec/stable_graphs.hpp"

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <string>

using namespace ribbonrec;

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  const char* bin = std::getenv("RIBBONREC_BIN");
  REQUIRE(bin != nullptr);
  std::string cmd = std::string(bin) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  while (std::size_t k = std::fread(buf.data(), 1, buf.size(), p)) out.append(buf.data(), k);
  int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string trim(std::string s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == ' ')) s.pop_back();
  return s;
}

std::string write_temp(const std::string& name, const std::string& content) {
  auto path = std::filesystem::temp_directory_path() / ("ribbonrec_test_" + std::to_string(::getpid()) + "_" + name);
  std::ofstream(path) << content;
  return path.string();
}

}  // namespace

TEST_CASE("reference outputs") {
  auto vn = run("vn --genus 1 --boundaries 1 --format latex");
  CHECK(vn.code == 0);
  CHECK(trim(vn.out) == "\\tfrac{1}{48} m_{(1)} + \\tfrac{\\pi^2 t^2}{24}");

  auto lat = run("lattice --genus 0 --boundaries 3 --L 1,1,1");
  CHECK(lat.code == 0);
  CHECK(Json::parse(lat.out)["value"] == "0");

  auto lat2 = run("lattice --genus 1 --boundaries 1 --L 4 --cross-check --format latex");
  CHECK(lat2.code == 0);
  CHECK(trim(lat2.out) == "1/4");

  auto tab = run("table1 --verify");
  CHECK(tab.code == 0);
  CHECK(tab.out.find("FAIL") == std::string::npos);
  CHECK(tab.out.find("PASS (3,1)") != std::string::npos);
}

TEST_CASE("polynomial commands") {
  auto v = run("vk -g 0 -n 4");
  REQUIRE(v.code == 0);
  CHECK(poly_from_json(Json::parse(v.out)) == vk(0, 4));

  auto m = run("mvpoly -g 1 -n 2 --cross-check");
  REQUIRE(m.code == 0);
  CHECK(poly_from_json(Json::parse(m.out)) == mv_poly_recursion(1, 2));

  auto csv = run("vn -g 0 -n 4 --format csv");
  CHECK(csv.code == 0);
  CHECK(csv.out.rfind("coeff,partition,pisq,tsq,sinv\n", 0) == 0);
}

TEST_CASE("graph commands") {
  auto g = run("graphs -g 1 -n 1 --all-cells");
  REQUIRE(g.code == 0);
  Json arr = Json::parse(g.out);
  REQUIRE(arr.size() == 2);
  for (const auto& item : arr) {
    RibbonGraph G = graph_from_json(item["graph"]);
    CHECK(canonical_form(G).aut == item["aut"].get<int>());
  }

  std::string path = write_temp("torus.json", graph_to_json(torus_graph()).dump());
  auto mc = run("multicurves --graph " + path + " --metric 1,1,1 --t 2");
  CHECK(mc.code == 0);
  CHECK(Json::parse(mc.out)["count"] == "4");
  auto comps = run("multicurves --graph " + path + " --metric 1,1,1 --t 2 --components");
  CHECK(comps.code == 0);
  CHECK(Json::parse(comps.out).size() == 4);

  auto ms = run("mcshane --graph " + path + " --metric 1/2,2/3,3");
  CHECK(ms.code == 0);
  CHECK(Json::parse(ms.out)["total"] == "1");
  std::filesystem::remove(path);

  auto sg = run("stable-graphs -g 0 -n 4 --sum zeta");
  REQUIRE(sg.code == 0);
  Json s = Json::parse(sg.out);
  CHECK(s["graphs"].size() == 4);
  CHECK(poly_from_json(s["sum"]) == mv_poly_recursion(0, 4));

  auto mv = run("stable-graphs -g 1 -n 1 --mv");
  REQUIRE(mv.code == 0);
  Json mj = Json::parse(mv.out);
  CHECK(mj["coeff"] == "2/3");
  CHECK(mj["agree"] == true);
}

TEST_CASE("flip and sampling commands") {
  auto f = run("fnflip --surface 1,1 --L 2 --ell 1 --tau 1/2");
  REQUIRE(f.code == 0);
  Json j = Json::parse(f.out);
  CHECK(j["ell_prime"] == "1/2");
  CHECK(j["tau_prime"] == "-1/2");

  auto h = run("fnflip --surface 1,1 --L 2 --ell 1 --tau 0.5 --hyperbolic --beta 1024");
  REQUIRE(h.code == 0);
  CHECK(Json::parse(h.out)["ell_prime"].get<double>() == doctest::Approx(0.5).epsilon(1e-2));

  auto a = run("mc-average -g 1 -n 1 --L 2 --observable one --samples 1000 --seed 9");
  auto b = run("mc-average -g 1 -n 1 --L 2 --observable one --samples 1000 --seed 9");
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("exit codes") {
  CHECK(run("").code == 1);
  CHECK(run("no-such-command").code == 1);
  CHECK(run("lattice -g 0 -n 3 --L 1/0,1,1").code == 1);
  CHECK(run("lattice -g 0 -n 3 --L x,1,1").code == 1);
  CHECK(run("vk -g 0 -n 2").code == 1);
  CHECK(run("vk -g 0 -n 4 --format xml").code == 1);
  CHECK(run("fnflip --surface 2,2 --L 1 --ell 1 --tau 0").code == 1);
  CHECK(run("multicurves --graph /nonexistent.json --metric 1 --t 1").code == 1);
  CHECK(run("--help").code == 0);
}

TEST_CASE("JSON round trips") {
  for (const auto& c : enumerate_all_cells(1, 2)) {
    Json j = graph_to_json(c.graph);
    CHECK(graph_from_json(Json::parse(j.dump())) == c.graph);
  }
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<int> d(1, 50);
  for (int it = 0; it < 20; ++it) {
    std::vector<Rational> m{make_rational(d(rng), d(rng)), make_rational(-d(rng), d(rng))};
    CHECK(metric_from_json(Json::parse(metric_to_json(m).dump())) == m);
  }
  for (auto [g, n] : std::vector<std::pair<int, int>>{{1, 1}, {0, 5}, {2, 1}}) {
    Poly p = twisted_vn(g, n).mv;
    CHECK(poly_from_json(Json::parse(poly_to_json(p, VarLayout{n}).dump())) == p);
  }
  for (const auto& sg : enumerate_stable_graphs(1, 2)) {
    auto back = stable_graph_from_json(Json::parse(stable_graph_to_json(sg).dump()), 2);
    CHECK(back.graph == sg.graph);
    CHECK(back.aut == sg.aut);
  }
  auto ms = integer_metrics(theta_graph(), {3, 4, 5});
  REQUIRE(ms.size() == 1);
  auto im = integer_metric_from_json(Json::parse(integer_metric_to_json(ms[0]).dump()));
  CHECK(im.lengths == ms[0].lengths);
  CHECK(im.aut == ms[0].aut);
  CHECK_THROWS(graph_from_json(Json::parse("{\"iota\": [1, 0]}")));
}
