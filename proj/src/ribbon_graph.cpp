#include "ribbonrec/ribbon_graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace ribbonrec {

RibbonGraph::RibbonGraph(std::vector<int> iota, std::vector<int> sigma, std::vector<int> face_labels)
    : iota_(std::move(iota)), sigma_(std::move(sigma)), label_of_(std::move(face_labels)) {
  derive();
}

void RibbonGraph::derive() {
  const int H = static_cast<int>(iota_.size());
  if (H == 0 || H % 2 != 0) throw std::invalid_argument("ribbon graph needs an even positive number of half-edges");
  if (static_cast<int>(sigma_.size()) != H || static_cast<int>(label_of_.size()) != H)
    throw std::invalid_argument("ribbon graph arrays have inconsistent sizes");
  sigma_inv_.assign(H, -1);
  for (int h = 0; h < H; ++h) {
    if (iota_[h] < 0 || iota_[h] >= H || iota_[h] == h || iota_[iota_[h]] != h)
      throw std::invalid_argument("iota must be a fixed-point-free involution");
    if (sigma_[h] < 0 || sigma_[h] >= H || sigma_inv_[sigma_[h]] != -1)
      throw std::invalid_argument("sigma must be a permutation");
    sigma_inv_[sigma_[h]] = h;
  }
  vertex_of_.assign(H, -1);
  vertices_.clear();
  for (int h = 0; h < H; ++h) {
    if (vertex_of_[h] >= 0) continue;
    std::vector<int> cyc;
    for (int x = h; vertex_of_[x] < 0; x = sigma_[x]) {
      vertex_of_[x] = static_cast<int>(vertices_.size());
      cyc.push_back(x);
    }
    vertices_.push_back(cyc);
  }
  edge_of_.assign(H, -1);
  edge_half_.clear();
  for (int h = 0; h < H; ++h) {
    if (edge_of_[h] >= 0) continue;
    edge_of_[h] = edge_of_[iota_[h]] = static_cast<int>(edge_half_.size());
    edge_half_.push_back(h);
  }
  int n = 0;
  for (int l : label_of_) {
    if (l < 0) throw std::invalid_argument("negative face label");
    n = std::max(n, l + 1);
  }
  faces_.assign(n, {});
  std::vector<char> seen(H, 0);
  int count = 0;
  for (int h = 0; h < H; ++h) {
    if (seen[h]) continue;
    ++count;
    int l = label_of_[h];
    if (!faces_[l].empty()) throw std::invalid_argument("face label used twice");
    for (int x = h; !seen[x]; x = sigma_[iota_[x]]) {
      if (label_of_[x] != l) throw std::invalid_argument("face label not constant along a face");
      seen[x] = 1;
      faces_[l].push_back(x);
    }
  }
  if (count != n) throw std::invalid_argument("face labels must be 0..n-1");
  std::vector<int> comp(vertices_.size(), -1);
  std::vector<int> stack{0};
  comp[0] = 0;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int h : vertices_[v]) {
      int w = vertex_of_[iota_[h]];
      if (comp[w] < 0) {
        comp[w] = 0;
        stack.push_back(w);
      }
    }
  }
  if (std::count(comp.begin(), comp.end(), -1)) throw std::invalid_argument("ribbon graph is disconnected");
  if ((num_vertices() - num_edges() + num_faces()) % 2 != 0) throw std::invalid_argument("odd Euler characteristic");
}

int RibbonGraph::genus() const { return (2 - num_vertices() + num_edges() - num_faces()) / 2; }

bool RibbonGraph::is_trivalent() const {
  for (const auto& v : vertices_)
    if (v.size() != 3) return false;
  return true;
}

std::vector<std::vector<int>> RibbonGraph::adjacency() const {
  std::vector<std::vector<int>> a(num_faces(), std::vector<int>(num_edges(), 0));
  for (int h = 0; h < num_half_edges(); ++h) a[label_of_[h]][edge_of_[h]]++;
  return a;
}

std::vector<Rational> RibbonGraph::perimeters(const std::vector<Rational>& lengths) const {
  if (static_cast<int>(lengths.size()) != num_edges()) throw std::invalid_argument("metric size mismatch");
  std::vector<Rational> L(num_faces(), 0);
  for (int h = 0; h < num_half_edges(); ++h) L[label_of_[h]] += lengths[edge_of_[h]];
  return L;
}

bool RibbonGraph::operator==(const RibbonGraph& o) const {
  return iota_ == o.iota_ && sigma_ == o.sigma_ && label_of_ == o.label_of_;
}

namespace {

// BFS relabelling from a root; returns false early once the code exceeds best.
bool rooted_code(const RibbonGraph& g, int root, bool use_labels, const CanonCode* best, CanonCode& code,
                 std::vector<int>& newlab, std::vector<int>& order) {
  const int H = g.num_half_edges();
  newlab.assign(H, -1);
  order.clear();
  code.clear();
  newlab[root] = 0;
  order.push_back(root);
  bool tied = best != nullptr;
  for (int x = 0; x < H; ++x) {
    if (x >= static_cast<int>(order.size())) return false;  // disconnected, cannot happen
    int h = order[x];
    for (int nb : {g.sigma(h), g.iota(h)}) {
      if (newlab[nb] < 0) {
        newlab[nb] = static_cast<int>(order.size());
        order.push_back(nb);
      }
    }
    int vals[3] = {newlab[g.sigma(h)], newlab[g.iota(h)], use_labels ? g.label_of(h) : 0};
    for (int v : vals) {
      if (tied) {
        int b = (*best)[code.size()];
        if (v > b) return false;
        if (v < b) tied = false;
      }
      code.push_back(v);
    }
  }
  return true;
}

}  // namespace

RibbonGraph relabel(const RibbonGraph& g, const std::vector<int>& perm) {
  const int H = g.num_half_edges();
  std::vector<int> iota(H), sigma(H), lab(H);
  for (int h = 0; h < H; ++h) {
    iota[perm[h]] = perm[g.iota(h)];
    sigma[perm[h]] = perm[g.sigma(h)];
    lab[perm[h]] = g.label_of(h);
  }
  return RibbonGraph(iota, sigma, lab);
}

namespace {

struct Search {
  CanonCode best;
  std::vector<int> best_lab;
  std::vector<int> roots;  // roots attaining best
};

Search search(const RibbonGraph& g, bool use_labels) {
  Search s;
  CanonCode code;
  std::vector<int> lab, order;
  for (int r = 0; r < g.num_half_edges(); ++r) {
    bool have = !s.best.empty();
    if (!rooted_code(g, r, use_labels, have ? &s.best : nullptr, code, lab, order)) continue;
    if (!have || code < s.best) {
      s.best = code;
      s.best_lab = lab;
      s.roots.assign(1, r);
    } else if (code == s.best) {
      s.roots.push_back(r);
    }
  }
  return s;
}

}  // namespace

Canonical canonical_form(const RibbonGraph& g) {
  Search s = search(g, true);
  Canonical c{relabel(g, s.best_lab), s.best, static_cast<int>(s.roots.size())};
  return c;
}

CanonCode unlabeled_code(const RibbonGraph& g) { return search(g, false).best; }

std::vector<std::vector<int>> automorphisms(const RibbonGraph& g) {
  Search s = search(g, true);
  std::vector<std::vector<int>> out;
  CanonCode code;
  std::vector<int> lab, order;
  const int H = g.num_half_edges();
  std::vector<int> inv(H);
  for (int h = 0; h < H; ++h) inv[s.best_lab[h]] = h;
  for (int r : s.roots) {
    rooted_code(g, r, true, nullptr, code, lab, order);
    std::vector<int> a(H);
    // h has canonical label best_lab[h]; the same label from root r sits on inv_r.
    std::vector<int> inv_r(H);
    for (int h = 0; h < H; ++h) inv_r[lab[h]] = h;
    for (int h = 0; h < H; ++h) a[h] = inv_r[s.best_lab[h]];
    out.push_back(a);
  }
  return out;
}

RibbonGraph contract_edge(const RibbonGraph& g, int e) {
  if (g.is_loop(e)) throw std::invalid_argument("cannot contract a loop");
  const int H = g.num_half_edges();
  int h = g.edge_half(e), k = g.iota(h);
  std::vector<int> sigma(g.sigma_vec());
  int ph = g.sigma_inv(h), pk = g.sigma_inv(k);
  sigma[ph] = g.sigma(k);
  sigma[pk] = g.sigma(h);
  std::vector<int> keep, idx(H, -1);
  for (int x = 0; x < H; ++x)
    if (x != h && x != k) {
      idx[x] = static_cast<int>(keep.size());
      keep.push_back(x);
    }
  std::vector<int> ni(keep.size()), ns(keep.size()), nl(keep.size());
  for (std::size_t i = 0; i < keep.size(); ++i) {
    int x = keep[i];
    ni[i] = idx[g.iota(x)];
    ns[i] = idx[sigma[x]];
    nl[i] = g.label_of(x);
  }
  return RibbonGraph(ni, ns, nl);
}

RibbonGraph theta_graph() {
  // Vertices (0 1 2), (3 4 5); edges {0,3}, {1,5}, {2,4}.
  std::vector<int> iota{3, 5, 4, 0, 2, 1};
  std::vector<int> sigma{1, 2, 0, 4, 5, 3};
  std::vector<int> lab(6, -1);
  int next = 0;
  for (int h = 0; h < 6; ++h) {
    if (lab[h] >= 0) continue;
    for (int x = h; lab[x] < 0; x = sigma[iota[x]]) lab[x] = next;
    ++next;
  }
  return RibbonGraph(iota, sigma, lab);
}

RibbonGraph torus_graph() {
  // Vertices (0 1 2), (3 4 5); edges {0,3}, {1,4}, {2,5}.
  return RibbonGraph({3, 4, 5, 0, 1, 2}, {1, 2, 0, 4, 5, 3}, std::vector<int>(6, 0));
}

RibbonGraph torus_two_edge_graph() {
  // One vertex (0 1 2 3); edges {0,2}, {1,3}.
  return RibbonGraph({2, 3, 0, 1}, {1, 2, 3, 0}, std::vector<int>(4, 0));
}

}  // namespace ribbonrec
