#include "ribbonrec/curves.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace ribbonrec {

bool is_closed_path(const RibbonGraph& g, const EdgeWord& w) {
  for (std::size_t i = 0; i < w.size(); ++i) {
    int h = w[i], k = w[(i + 1) % w.size()];
    if (h < 0 || h >= g.num_half_edges() || k < 0 || k >= g.num_half_edges()) return false;
    if (g.vertex_of(g.iota(h)) != g.vertex_of(k)) return false;
  }
  return true;
}

EdgeWord cyclic_reduce(const RibbonGraph& g, const EdgeWord& w) {
  EdgeWord s;
  for (int h : w) {
    if (!s.empty() && s.back() == g.iota(h))
      s.pop_back();
    else
      s.push_back(h);
  }
  std::size_t a = 0, b = s.size();
  while (b - a >= 2 && s[a] == g.iota(s[b - 1])) {
    ++a;
    --b;
  }
  return EdgeWord(s.begin() + static_cast<long>(a), s.begin() + static_cast<long>(b));
}

EdgeWord reverse_word(const RibbonGraph& g, const EdgeWord& w) {
  EdgeWord r;
  for (auto it = w.rbegin(); it != w.rend(); ++it) r.push_back(g.iota(*it));
  return r;
}

bool same_cyclic_word(const EdgeWord& a, const EdgeWord& b) {
  if (a.size() != b.size()) return false;
  if (a.empty()) return true;
  const std::size_t n = a.size();
  for (std::size_t s = 0; s < n; ++s) {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) ok = a[i] == b[(i + s) % n];
    if (ok) return true;
  }
  return false;
}

bool same_curve(const RibbonGraph& g, const EdgeWord& a, const EdgeWord& b) {
  return same_cyclic_word(a, b) || same_cyclic_word(a, reverse_word(g, b));
}

Rational word_length(const RibbonGraph& g, const EdgeWord& w, const std::vector<Rational>& lengths) {
  Rational s = 0;
  for (int h : w) s += lengths[g.edge_of(h)];
  return s;
}

ReducedCurve reduce_and_length(const RibbonGraph& g, const EdgeWord& w, const std::vector<Rational>& lengths) {
  if (!is_closed_path(g, w)) throw std::invalid_argument("word is not a closed edge path");
  EdgeWord r = cyclic_reduce(g, w);
  return {r, word_length(g, r, lengths)};
}

long corner_value(const RibbonGraph& g, const std::vector<long>& m, int h) {
  return m[g.edge_of(g.sigma_inv(h))] + m[g.edge_of(h)] - m[g.edge_of(g.sigma(h))];
}

bool zg_membership(const RibbonGraph& g, const std::vector<long>& m) {
  if (!g.is_trivalent()) throw std::invalid_argument("multicurve lattice requires a trivalent graph");
  if (static_cast<int>(m.size()) != g.num_edges()) throw std::invalid_argument("vector size mismatch");
  for (long x : m)
    if (x < 0) return false;
  for (int h = 0; h < g.num_half_edges(); ++h) {
    long c = corner_value(g, m, h);
    if (c < 0 || c % 2 != 0) return false;
  }
  for (const auto& f : g.faces()) {
    bool zero = false;
    for (int h : f) zero = zero || corner_value(g, m, h) == 0;
    if (!zero) return false;
  }
  return true;
}

std::vector<EdgeWord> trace_components(const RibbonGraph& g, const std::vector<long>& m) {
  if (!zg_membership(g, m)) throw std::invalid_argument("vector is not in the multicurve lattice");
  auto mult = [&](int h) { return m[g.edge_of(h)]; };
  // strands turning from stub a to sigma(a)
  auto turning = [&](int a) { return (mult(a) + mult(g.sigma(a)) - mult(g.sigma(g.sigma(a)))) / 2; };
  std::vector<std::vector<char>> seen(g.num_edges());
  for (int e = 0; e < g.num_edges(); ++e) seen[e].assign(static_cast<std::size_t>(m[e]), 0);
  auto mark = [&](int h, long p) -> bool {
    int e = g.edge_of(h);
    long q = h == g.edge_half(e) ? p : m[e] - 1 - p;
    if (seen[e][q]) return false;
    seen[e][q] = 1;
    return true;
  };
  std::vector<EdgeWord> out;
  for (int e = 0; e < g.num_edges(); ++e)
    for (long p0 = 0; p0 < m[e]; ++p0) {
      int h = g.edge_half(e);
      long p = p0;
      if (!mark(h, p)) continue;
      EdgeWord w;
      while (true) {
        w.push_back(h);
        int a = g.iota(h);
        long q = mult(a) - 1 - p;
        long nab = turning(a);
        if (q >= mult(a) - nab) {
          h = g.sigma(a);
          p = mult(a) - 1 - q;
        } else {
          h = g.sigma_inv(a);
          p = mult(h) - 1 - q;
        }
        if (!mark(h, p)) break;
      }
      out.push_back(w);
    }
  return out;
}

namespace {

template <typename T>
struct ZgSearch {
  const RibbonGraph& g;
  const std::vector<T>& len;
  T budget;
  bool strict;
  const std::function<void(const std::vector<long>&)>& visit;
  std::vector<int> order;                  // edge order
  std::vector<std::vector<int>> closing;   // vertices completed at step k
  std::vector<long> m;

  void setup() {
    const int E = g.num_edges();
    std::vector<int> pos(E, -1), vseen(g.num_vertices(), 0), queue{0};
    vseen[0] = 1;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      for (int h : g.vertices()[queue[qi]]) {
        int e = g.edge_of(h);
        if (pos[e] < 0) {
          pos[e] = static_cast<int>(order.size());
          order.push_back(e);
        }
        int w = g.vertex_of(g.iota(h));
        if (!vseen[w]) {
          vseen[w] = 1;
          queue.push_back(w);
        }
      }
    }
    closing.assign(E, {});
    for (int v = 0; v < g.num_vertices(); ++v) {
      int last = 0;
      for (int h : g.vertices()[v]) last = std::max(last, pos[g.edge_of(h)]);
      closing[last].push_back(v);
    }
    m.assign(E, 0);
  }

  bool vertex_ok(int v) const {
    for (int h : g.vertices()[v]) {
      long c = corner_value(g, m, h);
      if (c < 0 || (c & 1)) return false;
    }
    return true;
  }

  bool faces_ok() const {
    for (const auto& f : g.faces()) {
      bool zero = false;
      for (int h : f)
        if (corner_value(g, m, h) == 0) {
          zero = true;
          break;
        }
      if (!zero) return false;
    }
    return true;
  }

  void run(std::size_t k, const T& used) {
    if (k == order.size()) {
      if (faces_ok()) visit(m);
      return;
    }
    int e = order[k];
    long lo = 0, step = 1;
    // Narrow using a vertex where e is the only unassigned stub (non-loop).
    for (int v : closing[k]) {
      const auto& hs = g.vertices()[v];
      int others[2], cnt = 0;
      for (int h : hs)
        if (g.edge_of(h) != e && cnt < 2) others[cnt++] = g.edge_of(h);
      if (cnt == 2) {
        long a = m[others[0]], b = m[others[1]];
        lo = std::abs(a - b);
        step = 2;
        long hi_v = a + b;
        T room = budget - used;
        long hi = static_cast<long>(floor_div(room, len[e]));
        hi = std::min(hi, hi_v);
        for (long x = lo; x <= hi; x += step) try_value(k, e, x, used);
        return;
      }
    }
    T room = budget - used;
    long hi = static_cast<long>(floor_div(room, len[e]));
    for (long x = lo; x <= hi; x += step) try_value(k, e, x, used);
  }

  void try_value(std::size_t k, int e, long x, const T& used) {
    T nu = used + len[e] * T(x);
    if (strict ? !(nu < budget) : (budget < nu)) return;
    m[e] = x;
    bool ok = true;
    for (int v : closing[k])
      if (!vertex_ok(v)) {
        ok = false;
        break;
      }
    if (ok) run(k + 1, nu);
    m[e] = 0;
  }

  static double floor_div(double a, double b) { return a < 0 ? -1 : std::floor(a / b + 1e-12); }
  static double floor_div(const Rational& a, const Rational& b) {
    if (a < 0) return -1;
    Rational q = a / b;
    Integer f;
    mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return f.get_d();
  }
};

}  // namespace

template <typename T>
void enumerate_multicurves(const RibbonGraph& g, const std::vector<T>& lengths, const T& budget, bool strict,
                           const std::function<void(const std::vector<long>&)>& visit) {
  if (!g.is_trivalent()) throw std::invalid_argument("multicurve lattice requires a trivalent graph");
  if (static_cast<int>(lengths.size()) != g.num_edges()) throw std::invalid_argument("metric size mismatch");
  for (const auto& l : lengths)
    if (!(l > 0)) throw std::invalid_argument("edge lengths must be positive");
  ZgSearch<T> s{g, lengths, budget, strict, visit, {}, {}, {}};
  s.setup();
  if (budget < T(0) || (strict && !(T(0) < budget))) return;
  s.run(0, T(0));
}

template void enumerate_multicurves<Rational>(const RibbonGraph&, const std::vector<Rational>&, const Rational&, bool,
                                              const std::function<void(const std::vector<long>&)>&);
template void enumerate_multicurves<double>(const RibbonGraph&, const std::vector<double>&, const double&, bool,
                                            const std::function<void(const std::vector<long>&)>&);

Integer count_multicurves(const RibbonGraph& g, const std::vector<Rational>& lengths, const Rational& t) {
  if (t < 0) throw std::invalid_argument("t must be nonnegative");
  long count = 0;
  enumerate_multicurves<Rational>(g, lengths, t, false, [&](const std::vector<long>&) { ++count; });
  return Integer(count);
}

long count_multicurves_fast(const RibbonGraph& g, const std::vector<double>& lengths, double t) {
  long count = 0;
  enumerate_multicurves<double>(g, lengths, t * (1 + 1e-12), false, [&](const std::vector<long>&) { ++count; });
  return count;
}

std::vector<GrowthPoint> growth_estimate(const RibbonGraph& g, const std::vector<Rational>& lengths,
                                         const std::vector<Rational>& ts) {
  int d = 6 * g.genus() - 6 + 2 * g.num_faces();
  std::vector<GrowthPoint> out;
  for (const auto& t : ts) {
    Integer c = count_multicurves(g, lengths, t);
    double ratio = c.get_d() / std::pow(t.get_d(), d);
    out.push_back({t, c, ratio});
  }
  return out;
}

}  // namespace ribbonrec
