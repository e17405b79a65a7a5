#include "ribbonrec/stable_graphs.hpp"

#include "ribbonrec/recursion.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace ribbonrec {

int StableGraph::num_edges() const {
  int e = 0;
  for (int u = 0; u < num_vertices(); ++u)
    for (int v = u; v < num_vertices(); ++v) e += mult[u][v];
  return e;
}

int StableGraph::valence(int v) const {
  int k = 0;
  for (int l : leaf_vertex) k += l == v;
  for (int u = 0; u < num_vertices(); ++u) k += u == v ? 2 * mult[v][v] : mult[v][u];
  return k;
}

int StableGraph::total_genus() const {
  int s = std::accumulate(genus.begin(), genus.end(), 0);
  return s + num_edges() - num_vertices() + 1;
}

namespace {

using Code = std::vector<int>;

Code encode(const StableGraph& sg, const std::vector<int>& perm) {
  // perm[v] = new position of vertex v
  const int V = sg.num_vertices();
  std::vector<int> inv(V);
  for (int v = 0; v < V; ++v) inv[perm[v]] = v;
  Code c;
  for (int p = 0; p < V; ++p) c.push_back(sg.genus[inv[p]]);
  for (int l : sg.leaf_vertex) c.push_back(perm[l]);
  for (int p = 0; p < V; ++p)
    for (int q = p; q < V; ++q) c.push_back(sg.mult[inv[p]][inv[q]]);
  return c;
}

StableGraph permute_graph(const StableGraph& sg, const std::vector<int>& perm) {
  const int V = sg.num_vertices();
  StableGraph r;
  r.genus.resize(V);
  r.mult.assign(V, std::vector<int>(V, 0));
  for (int v = 0; v < V; ++v) r.genus[perm[v]] = sg.genus[v];
  for (int l : sg.leaf_vertex) r.leaf_vertex.push_back(perm[l]);
  for (int u = 0; u < V; ++u)
    for (int v = 0; v < V; ++v) r.mult[perm[u]][perm[v]] = sg.mult[u][v];
  return r;
}

std::pair<Code, std::vector<int>> canonical(const StableGraph& sg) {
  std::vector<int> perm(sg.num_vertices());
  std::iota(perm.begin(), perm.end(), 0);
  Code best;
  std::vector<int> arg;
  do {
    Code c = encode(sg, perm);
    if (best.empty() || c < best) {
      best = c;
      arg = perm;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return {best, arg};
}

bool connected(const StableGraph& sg) {
  const int V = sg.num_vertices();
  std::vector<int> seen(V, 0), stack{0};
  seen[0] = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int v = 0; v < V; ++v)
      if (!seen[v] && sg.mult[u][v] > 0) {
        seen[v] = 1;
        stack.push_back(v);
      }
  }
  return std::count(seen.begin(), seen.end(), 0) == 0;
}

}  // namespace

long stable_graph_aut(const StableGraph& sg) {
  const int V = sg.num_vertices();
  Code self;
  std::vector<int> id(V);
  std::iota(id.begin(), id.end(), 0);
  self = encode(sg, id);
  long sym = 0;
  std::vector<int> perm = id;
  do sym += encode(sg, perm) == self;
  while (std::next_permutation(perm.begin(), perm.end()));
  long a = sym;
  for (int u = 0; u < V; ++u)
    for (int v = u; v < V; ++v) {
      int m = sg.mult[u][v];
      a *= factorial(static_cast<unsigned>(m)).get_si();
      if (u == v) a <<= m;
    }
  return a;
}

std::vector<StableGraphClass> enumerate_stable_graphs(int g, int n) {
  if (g < 0 || n < 0 || 2 * g - 2 + n <= 0) throw std::invalid_argument("unstable type (g,n)");
  if (2 * g - 2 + n > 5) throw std::invalid_argument("type exceeds the stable-graph enumeration limit");
  const int chi = 2 * g - 2 + n;
  std::map<Code, StableGraph> found;
  for (int V = 1; V <= chi; ++V) {
    std::vector<std::pair<int, int>> slots;
    for (int u = 0; u < V; ++u)
      for (int v = u; v < V; ++v) slots.emplace_back(u, v);
    std::vector<int> genus(V, 0);
    std::function<void(int, int)> pick_genus = [&](int v, int left) {
      if (v == V) {
        int E = g - std::accumulate(genus.begin(), genus.end(), 0) + V - 1;
        if (E < V - 1) return;
        StableGraph sg;
        sg.genus = genus;
        sg.mult.assign(V, std::vector<int>(V, 0));
        std::vector<int> deg(V, 0);
        std::function<void(std::size_t, int)> fill = [&](std::size_t s, int rem) {
          if (s == slots.size()) {
            if (rem != 0 || !connected(sg)) return;
            // Minimum leaves per vertex for stability.
            int need = 0;
            for (int x = 0; x < V; ++x) need += std::max(0, 3 - 2 * genus[x] - deg[x]);
            if (need > n) return;
            sg.leaf_vertex.assign(n, 0);
            std::function<void(int)> leaves = [&](int i) {
              if (i == n) {
                for (int x = 0; x < V; ++x)
                  if (2 * genus[x] - 2 + sg.valence(x) <= 0) return;
                auto [code, perm] = canonical(sg);
                if (!found.count(code)) found.emplace(code, permute_graph(sg, perm));
                return;
              }
              for (int x = 0; x < V; ++x) {
                sg.leaf_vertex[i] = x;
                leaves(i + 1);
              }
            };
            leaves(0);
            return;
          }
          auto [u, v] = slots[s];
          for (int m = 0; m <= rem; ++m) {
            sg.mult[u][v] = sg.mult[v][u] = m;
            if (u == v)
              deg[u] += 2 * m;
            else {
              deg[u] += m;
              deg[v] += m;
            }
            bool ok = true;
            for (int x = 0; x < V && ok; ++x) ok = 2 * genus[x] - 2 + deg[x] <= chi - (V - 1);
            if (ok) fill(s + 1, rem - m);
            if (u == v)
              deg[u] -= 2 * m;
            else {
              deg[u] -= m;
              deg[v] -= m;
            }
            sg.mult[u][v] = sg.mult[v][u] = 0;
            if (!ok) break;
          }
        };
        fill(0, E);
        return;
      }
      for (int h = 0; h <= left; ++h) {
        genus[v] = h;
        pick_genus(v + 1, left - h);
      }
      genus[v] = 0;
    };
    pick_genus(0, g);
  }
  std::vector<StableGraphClass> out;
  for (auto& [code, sg] : found) out.push_back({sg, stable_graph_aut(sg)});
  return out;
}

Poly stable_graph_term(const StableGraph& sg, int n) {
  const int V = sg.num_vertices();
  // edges as (u, v) pairs, one per parallel copy
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < V; ++u)
    for (int v = u; v < V; ++v)
      for (int k = 0; k < sg.mult[u][v]; ++k) edges.emplace_back(u, v);
  const int E = static_cast<int>(edges.size());
  VarLayout big{n + E};
  Poly prod = Poly::constant(big.arity(), 1);
  for (int x = 0; x < V; ++x) {
    std::vector<std::size_t> targets;
    for (int i = 0; i < n; ++i)
      if (sg.leaf_vertex[i] == x) targets.push_back(static_cast<std::size_t>(i));
    for (int e = 0; e < E; ++e) {
      if (edges[e].first == x) targets.push_back(static_cast<std::size_t>(n + e));
      if (edges[e].second == x) targets.push_back(static_cast<std::size_t>(n + e));
    }
    const int k = static_cast<int>(targets.size());
    Poly w = vk(sg.genus[x], k);
    std::vector<std::size_t> map(targets);
    map.push_back(big.pisq());
    map.push_back(big.tsq());
    map.push_back(big.sinv());
    prod = prod * w.remap(big.arity(), map);
  }
  VarLayout out{n};
  Poly r(out.arity());
  for (const auto& [e, c] : prod.terms()) {
    Exponent base(out.arity(), 0);
    for (int i = 0; i < n; ++i) base[i] = e[i];
    Poly term = Poly::monomial(base, c);
    for (int j = 0; j < E; ++j) term = term * zeta_moment(e[n + j], n);
    r += term;
  }
  return r;
}

Poly stable_graph_sum(int g, int n, EdgeWeight w) {
  Poly total(VarLayout{n}.arity());
  for (const auto& c : enumerate_stable_graphs(g, n)) total += stable_graph_term(c.graph, n) * Rational(1, c.aut);
  if (w == EdgeWeight::Zeta) return total;
  VarLayout lay{n};
  Poly r(VarLayout{0}.arity());
  for (const auto& [e, c] : total.terms()) {
    bool constant = true;
    for (int i = 0; i < n; ++i) constant = constant && e[i] == 0;
    if (!constant) continue;
    Exponent f(3, 0);
    f[0] = e[lay.pisq()];
    r.add_term(f, c);
  }
  return r;
}

Integer mv_const_a(int g, int n) {
  Integer p;
  mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(4 * g - 2 + n));
  return p * factorial(static_cast<unsigned>(4 * g - 4 + n)) * (6 * g - 6 + 2 * n);
}

Rational mv_const_a_prime(int g, int n) {
  if (6 * g - 7 + 2 * n < 0) throw std::invalid_argument("a' undefined for this type");
  Integer p;
  mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(4 * g - 2 + n));
  return Rational(p * factorial(static_cast<unsigned>(4 * g - 4 + n))) /
         Rational(factorial(static_cast<unsigned>(6 * g - 7 + 2 * n)));
}

MvVolume mv_volume(int g, int n) {
  if (g == 0 && n == 3) throw std::invalid_argument("Masur-Veech volume undefined for (0,3)");
  if (g < 0 || n < 1 || 2 * g - 2 + n <= 0) throw std::invalid_argument("unstable type (g,n)");
  VarLayout lay{n};
  const int top = 3 * g - 3 + n;
  MvVolume r{Poly(3), Poly(3), false};
  Poly mv = mv_poly_recursion(g, n);
  for (const auto& [e, c] : mv.terms()) {
    bool constant = true;
    for (int i = 0; i < n; ++i) constant = constant && e[i] == 0;
    if (!constant) continue;
    r.from_recursion.add_term({e[lay.pisq()], 0, 0}, c * mv_const_a_prime(g, n));
  }
  Poly vn = laplace_invert(stable_graph_sum(g, n, EdgeWeight::Zeta), n);
  for (const auto& [e, c] : vn.terms()) {
    if (e[lay.tsq()] != top) continue;
    r.from_stable_graphs.add_term({e[lay.pisq()], 0, 0}, c * Rational(mv_const_a(g, n)));
  }
  r.agree = r.from_recursion == r.from_stable_graphs;
  return r;
}

}  // namespace ribbonrec
