#include "ribbonrec/ribbon_graph.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace ribbonrec {

Integer integer_determinant(std::vector<std::vector<Integer>> m) {
  // Fraction-free Bareiss elimination.
  const std::size_t n = m.size();
  if (n == 0) return 1;
  int sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

namespace {

// Length of the unique cycle of a connected graph with as many edges as vertices.
int single_cycle_length(int nv, const std::vector<std::pair<int, int>>& edges) {
  std::vector<int> deg(nv, 0);
  std::vector<char> alive_edge(edges.size(), 1);
  for (auto [a, b] : edges) {
    deg[a]++;
    deg[b]++;
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if (!alive_edge[i]) continue;
      auto [a, b] = edges[i];
      if (a != b && (deg[a] == 1 || deg[b] == 1)) {
        alive_edge[i] = 0;
        deg[a]--;
        deg[b]--;
        changed = true;
      }
    }
  }
  return static_cast<int>(std::count(alive_edge.begin(), alive_edge.end(), 1));
}

bool connected(int nv, const std::vector<std::pair<int, int>>& edges) {
  std::vector<int> parent(nv);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  int comps = nv;
  for (auto [a, b] : edges) {
    int ra = find(a), rb = find(b);
    if (ra != rb) {
      parent[ra] = rb;
      --comps;
    }
  }
  return comps == 1;
}

}  // namespace

DetCheck adjacency_det_check(const RibbonGraph& g) {
  if (!g.is_trivalent()) throw std::invalid_argument("adjacency_det_check requires a trivalent graph");
  const int n = g.num_faces(), E = g.num_edges();
  auto A = g.adjacency();
  std::vector<int> pick(E, 0);
  std::fill(pick.begin(), pick.begin() + n, 1);
  std::sort(pick.begin(), pick.end(), std::greater<int>());
  do {
    std::vector<int> S;
    std::vector<std::pair<int, int>> dual;
    for (int e = 0; e < E; ++e)
      if (pick[e]) {
        S.push_back(e);
        int h = g.edge_half(e);
        dual.emplace_back(g.label_of(h), g.label_of(g.iota(h)));
      }
    if (!connected(n, dual)) continue;
    if (single_cycle_length(n, dual) % 2 == 0) continue;
    std::vector<std::vector<Integer>> M(n, std::vector<Integer>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) M[i][j] = A[i][S[j]];
    return DetCheck{S, integer_determinant(M)};
  } while (std::prev_permutation(pick.begin(), pick.end()));
  throw std::runtime_error("no admissible edge subset found");
}

std::vector<Rational> solve_subset_lengths(const RibbonGraph& g, const std::vector<int>& subset,
                                           const std::vector<Rational>& lengths,
                                           const std::vector<Rational>& L) {
  const int n = g.num_faces();
  if (static_cast<int>(subset.size()) != n) throw std::invalid_argument("subset size must equal face count");
  auto A = g.adjacency();
  std::vector<char> in(g.num_edges(), 0);
  for (int e : subset) in[e] = 1;
  std::vector<std::vector<Rational>> M(n, std::vector<Rational>(n + 1));
  for (int i = 0; i < n; ++i) {
    Rational rhs = L[i];
    for (int e = 0; e < g.num_edges(); ++e)
      if (!in[e]) rhs -= A[i][e] * lengths[e];
    for (int j = 0; j < n; ++j) M[i][j] = A[i][subset[j]];
    M[i][n] = rhs;
  }
  for (int c = 0; c < n; ++c) {
    int p = c;
    while (p < n && M[p][c] == 0) ++p;
    if (p == n) throw std::runtime_error("singular restricted adjacency matrix");
    std::swap(M[p], M[c]);
    for (int i = 0; i < n; ++i) {
      if (i == c || M[i][c] == 0) continue;
      Rational f = M[i][c] / M[c][c];
      for (int j = c; j <= n; ++j) M[i][j] -= f * M[c][j];
    }
  }
  std::vector<Rational> x(n);
  for (int i = 0; i < n; ++i) x[i] = M[i][n] / M[i][i];
  return x;
}

std::vector<IntegerMetric> integer_metrics(const RibbonGraph& g, const std::vector<Integer>& L) {
  const int n = g.num_faces(), E = g.num_edges();
  if (static_cast<int>(L.size()) != n) throw std::invalid_argument("perimeter count mismatch");
  std::vector<IntegerMetric> out;
  Integer total = 0;
  for (const auto& x : L) {
    if (x < 1) throw std::invalid_argument("perimeters must be positive");
    total += x;
  }
  if (total % 2 != 0) return out;
  auto A = g.adjacency();
  std::vector<long> cap(n);
  for (int i = 0; i < n; ++i) cap[i] = L[i].get_si();
  // slots[i][k]: half-edge slots of face i on edges k..E-1.
  std::vector<std::vector<long>> slots(n, std::vector<long>(E + 1, 0));
  for (int i = 0; i < n; ++i)
    for (int k = E - 1; k >= 0; --k) slots[i][k] = slots[i][k + 1] + A[i][k];
  auto auts = automorphisms(g);
  std::vector<long> len(E), used(n, 0);
  std::function<void(int)> dfs = [&](int k) {
    if (k == E) {
      for (int i = 0; i < n; ++i)
        if (used[i] != cap[i]) return;
      IntegerMetric m;
      m.lengths.assign(len.begin(), len.end());
      m.aut = 0;
      for (const auto& a : auts) {
        bool ok = true;
        for (int h = 0; h < g.num_half_edges() && ok; ++h)
          ok = len[g.edge_of(a[h])] == len[g.edge_of(h)];
        m.aut += ok;
      }
      out.push_back(m);
      return;
    }
    long hi = -1, forced = -1;
    for (int i = 0; i < n; ++i) {
      if (!A[i][k]) continue;
      long room = cap[i] - used[i] - (slots[i][k + 1]);
      long b = room / A[i][k];
      if (hi < 0 || b < hi) hi = b;
      if (slots[i][k + 1] == 0) {
        if (room % A[i][k] != 0) return;
        long f = room / A[i][k];
        if (forced >= 0 && forced != f) return;
        forced = f;
      }
    }
    long lo = 1;
    if (forced == 0) return;
    if (forced > 0) lo = hi = forced;
    for (long x = lo; x <= hi; ++x) {
      len[k] = x;
      for (int i = 0; i < n; ++i) used[i] += A[i][k] * x;
      dfs(k + 1);
      for (int i = 0; i < n; ++i) used[i] -= A[i][k] * x;
    }
  };
  dfs(0);
  return out;
}

Rational weighted_lattice_count(const std::vector<GraphClass>& cells, const std::vector<Integer>& L) {
  Rational total = 0;
  for (const auto& c : cells) {
    auto ms = integer_metrics(c.graph, L);
    total += make_rational(static_cast<long>(ms.size()), c.aut);
  }
  return total;
}

}  // namespace ribbonrec
