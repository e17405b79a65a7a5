#include "ribbonrec/montecarlo.hpp"

#include "ribbonrec/curves.hpp"
#include "ribbonrec/parallel.hpp"

#include <array>
#include <cmath>
#include <random>
#include <stdexcept>

namespace ribbonrec {

namespace {

struct CellSampler {
  RibbonGraph graph;
  int aut;
  std::vector<int> subset, free_edges;
  std::vector<double> box;                 // upper bound per free edge
  std::vector<std::vector<double>> inv;    // inverse of the restricted adjacency matrix
  std::vector<std::vector<int>> A;
  double weight;                           // 2^(2g-3+n) * box volume / aut
};

std::vector<std::vector<double>> invert(std::vector<std::vector<double>> m) {
  const std::size_t n = m.size();
  std::vector<std::vector<double>> r(n, std::vector<double>(n, 0));
  for (std::size_t i = 0; i < n; ++i) r[i][i] = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    for (std::size_t i = c + 1; i < n; ++i)
      if (std::fabs(m[i][c]) > std::fabs(m[p][c])) p = i;
    std::swap(m[p], m[c]);
    std::swap(r[p], r[c]);
    double d = m[c][c];
    for (std::size_t j = 0; j < n; ++j) {
      m[c][j] /= d;
      r[c][j] /= d;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c) continue;
      double f = m[i][c];
      for (std::size_t j = 0; j < n; ++j) {
        m[i][j] -= f * m[c][j];
        r[i][j] -= f * r[c][j];
      }
    }
  }
  return r;
}

}  // namespace

Rational exact_volume_11(const Rational& L) { return L * L / 8 / 6; }

McResult mc_average(int g, int n, const std::vector<double>& L, Observable obs, double t, long samples,
                    std::uint64_t seed) {
  if (!((g == 1 && n == 1) || (g == 0 && n == 4))) throw std::invalid_argument("mc_average supports (1,1) and (0,4)");
  if (static_cast<int>(L.size()) != n) throw std::invalid_argument("perimeter count mismatch");
  if (samples <= 0) throw std::invalid_argument("sample count must be positive");
  std::vector<CellSampler> cells;
  for (const auto& c : enumerate_trivalent(g, n)) {
    CellSampler s;
    s.graph = c.graph;
    s.aut = c.aut;
    s.subset = adjacency_det_check(c.graph).subset;
    s.A = c.graph.adjacency();
    std::vector<char> in(c.graph.num_edges(), 0);
    for (int e : s.subset) in[e] = 1;
    double vol = 1;
    for (int e = 0; e < c.graph.num_edges(); ++e) {
      if (in[e]) continue;
      s.free_edges.push_back(e);
      double b = 1e300;
      for (int i = 0; i < n; ++i)
        if (s.A[i][e]) b = std::min(b, L[i] / s.A[i][e]);
      s.box.push_back(b);
      vol *= b;
    }
    std::vector<std::vector<double>> M(n, std::vector<double>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) M[i][j] = s.A[i][s.subset[j]];
    s.inv = invert(M);
    s.weight = std::ldexp(vol, 2 * g - 3 + n) / c.aut;
    cells.push_back(std::move(s));
  }
  const std::size_t chunks = 64;
  const long per_cell = (samples + static_cast<long>(cells.size()) - 1) / static_cast<long>(cells.size());
  // sums[cell][chunk] = (sum x, sum x^2, count)
  std::vector<std::vector<std::array<double, 3>>> sums(cells.size(), std::vector<std::array<double, 3>>(chunks));
  parallel_for(cells.size() * chunks, [&](std::size_t job) {
    std::size_t ci = job / chunks, ch = job % chunks;
    const CellSampler& s = cells[ci];
    long lo = per_cell * static_cast<long>(ch) / static_cast<long>(chunks);
    long hi = per_cell * static_cast<long>(ch + 1) / static_cast<long>(chunks);
    std::mt19937_64 rng(seed * 0x9E3779B97F4A7C15ULL + job * 0xBF58476D1CE4E5B9ULL + 1);
    std::uniform_real_distribution<double> U(0.0, 1.0);
    const int E = s.graph.num_edges();
    std::vector<double> len(E), rhs(n);
    double sx = 0, sxx = 0;
    for (long k = lo; k < hi; ++k) {
      for (std::size_t f = 0; f < s.free_edges.size(); ++f) len[s.free_edges[f]] = U(rng) * s.box[f];
      for (int i = 0; i < n; ++i) {
        rhs[i] = L[i];
        for (int e : s.free_edges) rhs[i] -= s.A[i][e] * len[e];
      }
      bool inside = true;
      for (int j = 0; j < n && inside; ++j) {
        double x = 0;
        for (int i = 0; i < n; ++i) x += s.inv[j][i] * rhs[i];
        len[s.subset[j]] = x;
        inside = x > 0;
      }
      double val = 0;
      if (inside) val = obs == Observable::One ? 1.0 : static_cast<double>(count_multicurves_fast(s.graph, len, t));
      sx += val;
      sxx += val * val;
    }
    sums[ci][ch] = {sx, sxx, static_cast<double>(hi - lo)};
  });
  McResult r;
  double var = 0;
  for (std::size_t ci = 0; ci < cells.size(); ++ci) {
    double sx = 0, sxx = 0, cnt = 0;
    for (const auto& a : sums[ci]) {
      sx += a[0];
      sxx += a[1];
      cnt += a[2];
    }
    double mean = sx / cnt, v = std::max(0.0, sxx / cnt - mean * mean);
    r.estimate += cells[ci].weight * mean;
    var += cells[ci].weight * cells[ci].weight * v / cnt;
    r.samples += static_cast<long>(cnt);
  }
  r.std_error = std::sqrt(var);
  return r;
}

}  // namespace ribbonrec
