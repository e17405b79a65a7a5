#include "ribbonrec/serialize.hpp"

#include <stdexcept>

namespace ribbonrec {

Json poly_to_json(const Poly& p, const VarLayout& layout) {
  if (p.arity() != layout.arity()) throw std::invalid_argument("poly_to_json: arity mismatch");
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms())
    terms.push_back({{"exp", e}, {"num", c.get_num().get_str()}, {"den", c.get_den().get_str()}});
  return {{"vars", layout.names()}, {"terms", terms}};
}

Poly poly_from_json(const Json& j) {
  std::size_t arity = j.at("vars").size();
  Poly p(arity);
  for (const auto& t : j.at("terms")) {
    Exponent e = t.at("exp").get<Exponent>();
    if (e.size() != arity) throw std::invalid_argument("poly_from_json: exponent arity");
    Rational c = make_rational(Integer(t.at("num").get<std::string>()), Integer(t.at("den").get<std::string>()));
    p.add_term(e, c);
  }
  return p;
}

Json graph_to_json(const RibbonGraph& g) {
  Json faces = Json::object();
  for (int i = 0; i < g.num_faces(); ++i) faces[std::to_string(i + 1)] = g.face(i);
  return {{"n_half_edges", g.num_half_edges()},
          {"iota", g.iota_vec()},
          {"sigma_cycles", g.vertices()},
          {"face_labels", faces}};
}

RibbonGraph graph_from_json(const Json& j) {
  int H = j.at("n_half_edges").get<int>();
  auto iota = j.at("iota").get<std::vector<int>>();
  if (static_cast<int>(iota.size()) != H) throw std::invalid_argument("graph json: iota size");
  std::vector<int> sigma(H, -1), labels(H, -1);
  for (const auto& cyc : j.at("sigma_cycles")) {
    auto c = cyc.get<std::vector<int>>();
    for (std::size_t i = 0; i < c.size(); ++i) {
      int h = c[i];
      if (h < 0 || h >= H || sigma[h] != -1) throw std::invalid_argument("graph json: bad sigma cycles");
      sigma[h] = c[(i + 1) % c.size()];
    }
  }
  for (const auto& [key, walk] : j.at("face_labels").items()) {
    int label = std::stoi(key) - 1;
    for (int h : walk.get<std::vector<int>>()) {
      if (h < 0 || h >= H) throw std::invalid_argument("graph json: bad face walk");
      labels[h] = label;
    }
  }
  return RibbonGraph(iota, sigma, labels);
}

Json metric_to_json(const std::vector<Rational>& lengths) {
  Json arr = Json::array();
  for (const auto& l : lengths) arr.push_back(to_string(l));
  return {{"lengths", arr}};
}

std::vector<Rational> metric_from_json(const Json& j) {
  std::vector<Rational> out;
  for (const auto& s : j.at("lengths")) out.push_back(parse_rational(s.get<std::string>()));
  return out;
}

Json integer_metric_to_json(const IntegerMetric& m) {
  Json arr = Json::array();
  for (const auto& l : m.lengths) arr.push_back(l.get_str());
  return {{"lengths", arr}, {"aut", m.aut}};
}

IntegerMetric integer_metric_from_json(const Json& j) {
  IntegerMetric m;
  for (const auto& s : j.at("lengths")) m.lengths.emplace_back(s.get<std::string>());
  m.aut = j.at("aut").get<int>();
  return m;
}

Json stable_graph_to_json(const StableGraphClass& c) {
  const StableGraph& sg = c.graph;
  Json verts = Json::array();
  for (int v = 0; v < sg.num_vertices(); ++v) {
    std::vector<int> leaves;
    for (std::size_t i = 0; i < sg.leaf_vertex.size(); ++i)
      if (sg.leaf_vertex[i] == v) leaves.push_back(static_cast<int>(i) + 1);
    verts.push_back({{"genus", sg.genus[v]}, {"leaves", leaves}});
  }
  Json edges = Json::array();
  for (int u = 0; u < sg.num_vertices(); ++u)
    for (int v = u; v < sg.num_vertices(); ++v)
      for (int k = 0; k < sg.mult[u][v]; ++k) edges.push_back({u, v});
  return {{"vertices", verts}, {"edges", edges}, {"aut", c.aut}};
}

StableGraphClass stable_graph_from_json(const Json& j, int n) {
  StableGraphClass c;
  StableGraph& sg = c.graph;
  const auto& verts = j.at("vertices");
  int V = static_cast<int>(verts.size());
  sg.leaf_vertex.assign(n, -1);
  sg.mult.assign(V, std::vector<int>(V, 0));
  for (int v = 0; v < V; ++v) {
    sg.genus.push_back(verts[v].at("genus").get<int>());
    for (int leaf : verts[v].at("leaves").get<std::vector<int>>()) {
      if (leaf < 1 || leaf > n) throw std::invalid_argument("stable graph json: bad leaf");
      sg.leaf_vertex[leaf - 1] = v;
    }
  }
  for (const auto& e : j.at("edges")) {
    int u = e.at(0).get<int>(), v = e.at(1).get<int>();
    if (u < 0 || v < 0 || u >= V || v >= V) throw std::invalid_argument("stable graph json: bad edge");
    ++sg.mult[u][v];
    if (u != v) ++sg.mult[v][u];
  }
  c.aut = j.at("aut").get<long>();
  return c;
}

}  // namespace ribbonrec
