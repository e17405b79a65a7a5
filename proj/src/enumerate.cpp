#include "ribbonrec/ribbon_graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace ribbonrec {

namespace {

void check_type(int g, int n) {
  if (g < 0 || n < 1 || 2 * g - 2 + n <= 0) throw std::invalid_argument("unstable type (g,n)");
  if (6 * g - 6 + 3 * n > 15) throw std::invalid_argument("type exceeds the 15-edge enumeration limit");
}

int count_faces(const std::vector<int>& iota, const std::vector<int>& sigma) {
  const int H = static_cast<int>(iota.size());
  std::vector<char> seen(H, 0);
  int f = 0;
  for (int h = 0; h < H; ++h) {
    if (seen[h]) continue;
    ++f;
    for (int x = h; !seen[x]; x = sigma[iota[x]]) seen[x] = 1;
  }
  return f;
}

std::vector<int> face_ids(const std::vector<int>& iota, const std::vector<int>& sigma) {
  const int H = static_cast<int>(iota.size());
  std::vector<int> id(H, -1);
  int f = 0;
  for (int h = 0; h < H; ++h) {
    if (id[h] >= 0) continue;
    for (int x = h; id[x] < 0; x = sigma[iota[x]]) id[x] = f;
    ++f;
  }
  return id;
}

// Connected cubic maps generated in BFS order from the root half-edge 0:
// each rooted map appears exactly once.
struct CubicGenerator {
  int V, n;
  std::vector<int> iota, sigma;
  std::set<CanonCode> seen;
  std::vector<RibbonGraph> reps;
  int used = 1;

  void run() {
    iota.assign(3 * V, -1);
    sigma.resize(3 * V);
    for (int v = 0; v < V; ++v)
      for (int j = 0; j < 3; ++j) sigma[3 * v + j] = 3 * v + (j + 1) % 3;
    step();
  }

  void step() {
    int i = 0;
    while (i < 3 * used && iota[i] >= 0) ++i;
    if (i == 3 * used) {
      if (used != V) return;
      if (count_faces(iota, sigma) != n) return;
      RibbonGraph g(iota, sigma, face_ids(iota, sigma));
      CanonCode code = unlabeled_code(g);
      if (seen.insert(code).second) reps.push_back(g);
      return;
    }
    for (int j = i + 1; j < 3 * used; ++j) {
      if (iota[j] >= 0) continue;
      iota[i] = j;
      iota[j] = i;
      step();
      iota[i] = iota[j] = -1;
    }
    if (used < V) {
      int j = 3 * used;
      ++used;
      iota[i] = j;
      iota[j] = i;
      step();
      iota[i] = iota[j] = -1;
      --used;
    }
  }
};

std::vector<GraphClass> label_all(const std::vector<RibbonGraph>& reps, int n) {
  std::map<CanonCode, GraphClass> out;
  for (const auto& g : reps) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      std::vector<int> lab(g.num_half_edges());
      for (int h = 0; h < g.num_half_edges(); ++h) lab[h] = perm[g.label_of(h)];
      RibbonGraph lg(g.iota_vec(), g.sigma_vec(), lab);
      Canonical c = canonical_form(lg);
      if (!out.count(c.code)) out.emplace(c.code, GraphClass{c.graph, c.code, c.aut});
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  std::vector<GraphClass> v;
  for (auto& [code, gc] : out) v.push_back(std::move(gc));
  return v;
}

}  // namespace

std::vector<GraphClass> enumerate_trivalent(int g, int n) {
  check_type(g, n);
  CubicGenerator gen{2 * (2 * g - 2 + n), n, {}, {}, {}, {}};
  gen.run();
  return label_all(gen.reps, n);
}

std::vector<GraphClass> enumerate_all_cells(int g, int n) {
  std::vector<GraphClass> top = enumerate_trivalent(g, n);
  std::map<CanonCode, GraphClass> all;
  std::vector<RibbonGraph> frontier;
  for (const auto& c : top) {
    all.emplace(c.code, c);
    frontier.push_back(c.graph);
  }
  while (!frontier.empty()) {
    std::vector<RibbonGraph> next;
    for (const auto& gr : frontier)
      for (int e = 0; e < gr.num_edges(); ++e) {
        if (gr.is_loop(e)) continue;
        Canonical c = canonical_form(contract_edge(gr, e));
        if (all.count(c.code)) continue;
        all.emplace(c.code, GraphClass{c.graph, c.code, c.aut});
        next.push_back(c.graph);
      }
    frontier = std::move(next);
  }
  std::vector<GraphClass> v;
  for (auto& [code, gc] : all) v.push_back(std::move(gc));
  return v;
}

}  // namespace ribbonrec
