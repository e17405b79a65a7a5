#include "ribbonrec/curves.hpp"
#include "ribbonrec/flip.hpp"
#include "ribbonrec/montecarlo.hpp"
#include "ribbonrec/pants.hpp"
#include "ribbonrec/recursion.hpp"
#include "ribbonrec/ribbon_graph.hpp"
#include "ribbonrec/serialize.hpp"
#include "ribbonrec/stable_graphs.hpp"
#include "ribbonrec/symmetric.hpp"
#include "ribbonrec/table1.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

using namespace ribbonrec;

namespace {

const double kPiSq = 9.8696044010893586;

// Raised when two independent routes disagree.
struct CrossCheckFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  int genus = 0;
  int boundaries = 0;
  std::string L;
  std::string format = "json";
  std::string graph_file;
  std::string metric;
  std::string t = "0";
  std::string ell, tau;
  std::string surface = "1,1";
  std::string observable = "one";
  std::string sum = "zeta";
  double beta = 1;
  long samples = 100000;
  std::uint64_t seed = 1;
  bool all_cells = false;
  bool components = false;
  bool hyperbolic = false;
  bool mv = false;
  bool verify = false;
  bool cross_check = false;
};

std::vector<double> parse_doubles(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double v = std::stod(item, &used);
    if (used != item.size()) throw std::invalid_argument("malformed number: " + item);
    out.push_back(v);
  }
  return out;
}

double parse_double(const std::string& text) {
  auto v = parse_doubles(text);
  if (v.size() != 1) throw std::invalid_argument("expected one number: " + text);
  return v[0];
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  return Json::parse(in);
}

std::string partition_string(const Partition& p) {
  std::string s;
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? " " : "") + std::to_string(p[i]);
  return s;
}

void print_poly(const Poly& p, int n, const std::string& format) {
  if (format == "latex") {
    std::cout << to_latex(render_symmetric(p, n)) << "\n";
  } else if (format == "csv") {
    std::cout << "coeff,partition,pisq,tsq,sinv\n";
    for (const auto& t : render_symmetric(p, n))
      std::cout << to_string(t.coeff) << "," << partition_string(t.partition) << "," << t.pisq << "," << t.tsq << ","
                << t.sinv << "\n";
  } else {
    Json j = poly_to_json(p, VarLayout{n});
    j["plain"] = to_plain(render_symmetric(p, n));
    std::cout << j.dump(2) << "\n";
  }
}

void print_scalar(const std::string& name, const std::string& value, const std::string& format) {
  if (format == "json")
    std::cout << Json{{name, value}}.dump() << "\n";
  else if (format == "csv")
    std::cout << name << "\n" << value << "\n";
  else
    std::cout << value << "\n";
}

int cmd_graphs(const RunConfig& c) {
  auto classes = c.all_cells ? enumerate_all_cells(c.genus, c.boundaries) : enumerate_trivalent(c.genus, c.boundaries);
  if (c.format == "csv") {
    std::cout << "index,edges,vertices,aut\n";
    for (std::size_t i = 0; i < classes.size(); ++i)
      std::cout << i << "," << classes[i].graph.num_edges() << "," << classes[i].graph.num_vertices() << ","
                << classes[i].aut << "\n";
    return 0;
  }
  Json arr = Json::array();
  for (const auto& g : classes) arr.push_back({{"graph", graph_to_json(g.graph)}, {"aut", g.aut}});
  std::cout << arr.dump(c.format == "json" ? 2 : -1) << "\n";
  return 0;
}

int cmd_multicurves(const RunConfig& c) {
  RibbonGraph g = graph_from_json(read_json_file(c.graph_file));
  auto lengths = parse_rational_list(c.metric);
  if (static_cast<int>(lengths.size()) != g.num_edges()) throw std::invalid_argument("metric has wrong length");
  for (const auto& l : lengths)
    if (l <= 0) throw std::invalid_argument("edge lengths must be positive");
  Rational t = parse_rational(c.t);
  if (t < 0) throw std::invalid_argument("t must be nonnegative");
  if (!c.components) {
    print_scalar("count", count_multicurves(g, lengths, t).get_str(), c.format);
    return 0;
  }
  Json arr = Json::array();
  enumerate_multicurves<Rational>(g, lengths, t, false, [&](const std::vector<long>& m) {
    Json comps = Json::array();
    for (const auto& w : trace_components(g, m)) comps.push_back(w);
    arr.push_back({{"m", m}, {"components", comps}});
  });
  std::cout << arr.dump(2) << "\n";
  return 0;
}

int cmd_mcshane(const RunConfig& c) {
  RibbonGraph g = graph_from_json(read_json_file(c.graph_file));
  auto lengths = parse_rational_list(c.metric);
  if (static_cast<int>(lengths.size()) != g.num_edges()) throw std::invalid_argument("metric has wrong length");
  McShaneResult r = (g.genus() == 1 && g.boundaries() == 1) ? mcshane_torus(g, lengths) : mcshane_check(g, lengths);
  if (c.format == "csv") {
    std::cout << "edge,kind,value\n";
    for (const auto& t : r.terms) std::cout << t.edge << "," << t.kind << "," << to_string(t.value) << "\n";
    std::cout << "total,," << to_string(r.total) << "\n";
  } else {
    Json terms = Json::array();
    for (const auto& t : r.terms) terms.push_back({{"edge", t.edge}, {"kind", t.kind}, {"value", to_string(t.value)}});
    std::cout << Json{{"terms", terms}, {"total", to_string(r.total)}}.dump(2) << "\n";
  }
  if (r.total != 1) throw CrossCheckFailure("Mirzakhani-McShane sum differs from 1");
  return 0;
}

int cmd_lattice(const RunConfig& c) {
  std::vector<long> L;
  for (const auto& q : parse_rational_list(c.L)) {
    if (q.get_den() != 1) throw std::invalid_argument("lattice perimeters must be integers");
    L.push_back(q.get_num().get_si());
  }
  if (static_cast<int>(L.size()) != c.boundaries) throw std::invalid_argument("--L needs one value per boundary");
  Rational v = discrete_n(c.genus, L);
  if (c.cross_check) {
    std::vector<Integer> Li(L.begin(), L.end());
    if (weighted_lattice_count(enumerate_all_cells(c.genus, c.boundaries), Li) != v)
      throw CrossCheckFailure("discrete recursion disagrees with lattice enumeration");
  }
  print_scalar("value", to_string(v), c.format);
  return 0;
}

int cmd_vk(const RunConfig& c) {
  print_poly(vk(c.genus, c.boundaries), c.boundaries, c.format);
  return 0;
}

int cmd_vn(const RunConfig& c) {
  print_poly(twisted_vn(c.genus, c.boundaries).vn, c.boundaries, c.format);
  return 0;
}

int cmd_mvpoly(const RunConfig& c) {
  Poly p = mv_poly_recursion(c.genus, c.boundaries);
  if (c.cross_check && stable_graph_sum(c.genus, c.boundaries, EdgeWeight::Zeta) != p)
    throw CrossCheckFailure("twisted recursion disagrees with the stable-graph sum");
  print_poly(p, c.boundaries, c.format);
  return 0;
}

int cmd_stable_graphs(const RunConfig& c) {
  if (c.mv) {
    MvVolume v = mv_volume(c.genus, c.boundaries);
    Rational coeff;
    int k = 0;
    for (const auto& [e, q] : v.from_recursion.terms()) {
      coeff = q;
      k = e[0];
    }
    double approx = coeff.get_d() * std::pow(kPiSq, k);
    if (c.format == "csv")
      std::cout << "coeff,pisq_power,value,agree\n"
                << to_string(coeff) << "," << k << "," << approx << "," << v.agree << "\n";
    else
      std::cout << Json{{"coeff", to_string(coeff)}, {"pisq_power", k}, {"value", approx}, {"agree", v.agree}}.dump(2)
                << "\n";
    if (!v.agree) throw CrossCheckFailure("Masur-Veech volume routes disagree");
    return 0;
  }
  auto graphs = enumerate_stable_graphs(c.genus, c.boundaries);
  if (c.sum == "bgn") {
    Poly p = stable_graph_sum(c.genus, c.boundaries, EdgeWeight::Bgn);
    std::cout << poly_to_json(p, VarLayout{0}).dump(2) << "\n";
    return 0;
  }
  if (c.format == "csv") {
    std::cout << "index,vertices,edges,aut\n";
    for (std::size_t i = 0; i < graphs.size(); ++i)
      std::cout << i << "," << graphs[i].graph.num_vertices() << "," << graphs[i].graph.num_edges() << ","
                << graphs[i].aut << "\n";
    return 0;
  }
  Json arr = Json::array();
  for (const auto& g : graphs) arr.push_back(stable_graph_to_json(g));
  Json out{{"graphs", arr}};
  if (c.sum == "zeta")
    out["sum"] = poly_to_json(stable_graph_sum(c.genus, c.boundaries, EdgeWeight::Zeta), VarLayout{c.boundaries});
  std::cout << out.dump(2) << "\n";
  return 0;
}

int cmd_fnflip(const RunConfig& c) {
  bool sphere = c.surface == "0,4";
  if (!sphere && c.surface != "1,1") throw std::invalid_argument("--surface must be 0,4 or 1,1");
  Json out;
  if (c.hyperbolic) {
    auto L = parse_doubles(c.L);
    double ell = parse_double(c.ell), tau = parse_double(c.tau);
    HypFlip h;
    if (sphere) {
      if (L.size() != 4) throw std::invalid_argument("--L needs four values");
      h = hyp_flip_04({L[0], L[1], L[2], L[3]}, ell, tau, c.beta);
    } else {
      if (L.size() != 1) throw std::invalid_argument("--L needs one value");
      h = hyp_flip_11(L[0], ell, tau, c.beta);
    }
    out = {{"ell_prime", h.ell_p}, {"tau_prime", h.tau_p}, {"beta", c.beta}};
  } else {
    auto L = parse_rational_list(c.L);
    Rational ell = parse_rational(c.ell), tau = parse_rational(c.tau);
    FlipResult r;
    if (sphere) {
      if (L.size() != 4) throw std::invalid_argument("--L needs four values");
      r = comb_flip_04({{L[0], L[1], L[2], L[3]}, ell, tau});
    } else {
      if (L.size() != 1) throw std::invalid_argument("--L needs one value");
      r = comb_flip_11({L[0], ell, tau});
    }
    out = {{"ell_prime", to_string(r.ell_p)}, {"tau_prime", to_string(r.tau_p)}, {"degenerate", r.degenerate}};
  }
  if (c.format == "csv") {
    std::cout << "ell_prime,tau_prime\n";
    auto show = [](const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
    std::cout << show(out["ell_prime"]) << "," << show(out["tau_prime"]) << "\n";
  } else {
    std::cout << out.dump(2) << "\n";
  }
  return 0;
}

int cmd_mc_average(const RunConfig& c) {
  auto L = parse_doubles(c.L);
  Observable obs;
  if (c.observable == "one")
    obs = Observable::One;
  else if (c.observable == "count")
    obs = Observable::MulticurveCount;
  else
    throw std::invalid_argument("--observable must be one or count");
  McResult r = mc_average(c.genus, c.boundaries, L, obs, parse_double(c.t), c.samples, c.seed);
  if (c.format == "csv")
    std::cout << "estimate,std_error,samples\n" << r.estimate << "," << r.std_error << "," << r.samples << "\n";
  else
    std::cout << Json{{"estimate", r.estimate}, {"std_error", r.std_error}, {"samples", r.samples}}.dump(2) << "\n";
  return 0;
}

int cmd_table1(const RunConfig& c) {
  bool all = true;
  for (const auto& row : table1_rows()) {
    std::string label = "(" + std::to_string(row.g) + "," + std::to_string(row.n) + ")";
    if (!c.verify) {
      std::cout << label << " " << to_latex(row.terms) << "\n";
      continue;
    }
    bool ok = twisted_vn(row.g, row.n).vn == table1_poly(row);
    all = all && ok;
    std::cout << (ok ? "PASS " : "FAIL ") << label << "\n";
  }
  if (!all) throw CrossCheckFailure("table mismatch");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ribbonrec: invariants of combinatorial moduli spaces"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto topo = [&](CLI::App* s) {
    s->add_option("--genus,-g", cfg.genus, "genus")->required();
    s->add_option("--boundaries,-n", cfg.boundaries, "number of boundaries")->required();
  };
  auto fmt = [&](CLI::App* s) {
    s->add_option("--format", cfg.format, "json|csv|latex")->check(CLI::IsMember({"json", "csv", "latex"}));
  };

  auto* graphs = app.add_subcommand("graphs", "enumerate ribbon graphs");
  topo(graphs);
  fmt(graphs);
  graphs->add_flag("--all-cells", cfg.all_cells, "include lower-dimensional cells");

  auto* multicurves = app.add_subcommand("multicurves", "count multicurves of bounded length");
  multicurves->add_option("--graph", cfg.graph_file, "graph JSON file")->required();
  multicurves->add_option("--metric", cfg.metric, "edge lengths p/q,...")->required();
  multicurves->add_option("--t", cfg.t, "length bound");
  multicurves->add_flag("--components", cfg.components, "list lattice points with traced components");
  fmt(multicurves);

  auto* mcshane = app.add_subcommand("mcshane", "Mirzakhani-McShane sum on a metric graph");
  mcshane->add_option("--graph", cfg.graph_file, "graph JSON file")->required();
  mcshane->add_option("--metric", cfg.metric, "edge lengths p/q,...")->required();
  fmt(mcshane);

  auto* vkc = app.add_subcommand("vk", "Kontsevich volume polynomial");
  topo(vkc);
  fmt(vkc);

  auto* lattice = app.add_subcommand("lattice", "lattice count from the discrete recursion");
  topo(lattice);
  lattice->add_option("--L", cfg.L, "integer perimeters")->required();
  lattice->add_flag("--cross-check", cfg.cross_check, "compare with lattice enumeration");
  fmt(lattice);

  auto* vn = app.add_subcommand("vn", "integrated multicurve count polynomial");
  topo(vn);
  fmt(vn);

  auto* mvpoly = app.add_subcommand("mvpoly", "Masur-Veech polynomial");
  topo(mvpoly);
  mvpoly->add_flag("--cross-check", cfg.cross_check, "compare with the stable-graph sum");
  fmt(mvpoly);

  auto* stable = app.add_subcommand("stable-graphs", "stable graphs and their sums");
  topo(stable);
  stable->add_option("--sum", cfg.sum, "zeta|bgn|none")->check(CLI::IsMember({"zeta", "bgn", "none"}));
  stable->add_flag("--mv", cfg.mv, "Masur-Veech volume by two routes");
  fmt(stable);

  auto* fnflip = app.add_subcommand("fnflip", "Fenchel-Nielsen flip");
  fnflip->add_option("--surface", cfg.surface, "0,4 or 1,1");
  fnflip->add_option("--L", cfg.L, "boundary lengths")->required();
  fnflip->add_option("--ell", cfg.ell, "length")->required();
  fnflip->add_option("--tau", cfg.tau, "twist")->required();
  fnflip->add_flag("--hyperbolic", cfg.hyperbolic, "use the hyperbolic formulas");
  fnflip->add_option("--beta", cfg.beta, "rescaling factor");
  fmt(fnflip);

  auto* mc = app.add_subcommand("mc-average", "Monte-Carlo integral over the moduli space");
  topo(mc);
  mc->add_option("--L", cfg.L, "perimeters")->required();
  mc->add_option("--observable", cfg.observable, "one|count");
  mc->add_option("--t", cfg.t, "length bound for count");
  mc->add_option("--samples", cfg.samples, "samples");
  mc->add_option("--seed", cfg.seed, "seed");
  fmt(mc);

  auto* table1 = app.add_subcommand("table1", "reference table");
  table1->add_flag("--verify", cfg.verify, "recompute every row");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    auto* s = app.get_subcommands().front();
    const std::string name = s->get_name();
    if (name == "graphs") return cmd_graphs(cfg);
    if (name == "multicurves") return cmd_multicurves(cfg);
    if (name == "mcshane") return cmd_mcshane(cfg);
    if (name == "vk") return cmd_vk(cfg);
    if (name == "lattice") return cmd_lattice(cfg);
    if (name == "vn") return cmd_vn(cfg);
    if (name == "mvpoly") return cmd_mvpoly(cfg);
    if (name == "stable-graphs") return cmd_stable_graphs(cfg);
    if (name == "fnflip") return cmd_fnflip(cfg);
    if (name == "mc-average") return cmd_mc_average(cfg);
    if (name == "table1") return cmd_table1(cfg);
    std::cerr << "unknown command " << name << "\n";
    return 1;
  } catch (const CrossCheckFailure& e) {
    std::cerr << "cross-check failure: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
