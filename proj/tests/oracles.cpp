#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

namespace oracle {

namespace {

int count_cycles(const std::vector<int>& perm) {
  std::vector<char> seen(perm.size(), 0);
  int c = 0;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    ++c;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(perm[j])) seen[j] = 1;
  }
  return c;
}

bool connected(const std::vector<int>& iota, const std::vector<int>& sigma) {
  const std::size_t H = iota.size();
  std::vector<char> seen(H, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  std::size_t count = 1;
  while (!stack.empty()) {
    int h = stack.back();
    stack.pop_back();
    for (int k : {iota[h], sigma[h]})
      if (!seen[k]) {
        seen[k] = 1;
        ++count;
        stack.push_back(k);
      }
  }
  return count == H;
}

Rational power(const Rational& x, int k) {
  Rational r = 1;
  for (int i = 0; i < k; ++i) r *= x;
  return r;
}

Rational kernel_b(const Rational& L1, const Rational& L2, const Rational& l) {
  auto pos = [](const Rational& x) { return x > 0 ? x : Rational(0); };
  return (pos(L1 - L2 - l) - pos(L2 - L1 - l) + pos(L1 + L2 - l)) / (2 * L1);
}

}  // namespace

Rational ribbon_mass(int g, int n, int E, int min_valence, int max_valence) {
  const int H = 2 * E;
  std::vector<int> iota(H), sigma(H, -1);
  for (int h = 0; h < H; ++h) iota[h] = h ^ 1;
  std::vector<char> used(H, 0);
  Integer count = 0;
  std::vector<int> phi(H);
  std::function<void()> rec = [&]() {
    int first = -1;
    for (int h = 0; h < H; ++h)
      if (!used[h]) {
        first = h;
        break;
      }
    if (first < 0) {
      for (int h = 0; h < H; ++h) phi[h] = sigma[iota[h]];
      int V = count_cycles(sigma), F = count_cycles(phi);
      if (F != n || V - E + F != 2 - 2 * g || !connected(iota, sigma)) return;
      Integer labels = 1;
      for (int i = 2; i <= n; ++i) labels *= i;
      count += labels;
      return;
    }
    used[first] = 1;
    std::vector<int> cyc{first};
    std::function<void()> grow = [&]() {
      int len = static_cast<int>(cyc.size());
      if (len >= min_valence && len <= max_valence) {
        for (int i = 0; i < len; ++i) sigma[cyc[i]] = cyc[(i + 1) % len];
        rec();
      }
      if (len == max_valence) return;
      for (int h = first + 1; h < H; ++h) {
        if (used[h]) continue;
        used[h] = 1;
        cyc.push_back(h);
        grow();
        cyc.pop_back();
        used[h] = 0;
      }
    };
    grow();
    used[first] = 0;
  };
  rec();
  Integer denom = 1;
  for (int i = 1; i <= E; ++i) denom *= 2 * i;
  Rational r(count, denom);
  r.canonicalize();
  return r;
}

long box_lattice_solutions(const ribbonrec::RibbonGraph& g, const std::vector<long>& L) {
  const int H = g.num_half_edges(), E = H / 2;
  const auto& iota = g.iota_vec();
  const auto& label = g.labels();
  // edge ids by smaller half-edge
  std::vector<int> edge(H);
  int next = 0;
  for (int h = 0; h < H; ++h)
    if (h < iota[h]) edge[h] = edge[iota[h]] = next++;
  // each half-edge contributes its edge once to the face it bounds
  std::vector<std::vector<int>> A(L.size(), std::vector<int>(E, 0));
  for (int h = 0; h < H; ++h) ++A[label[h]][edge[h]];
  std::vector<long> hi(E, 0);
  for (int e = 0; e < E; ++e) {
    long b = -1;
    for (std::size_t i = 0; i < L.size(); ++i)
      if (A[i][e]) {
        long x = L[i] / A[i][e];
        if (b < 0 || x < b) b = x;
      }
    hi[e] = b;
  }
  std::vector<long> l(E, 1);
  long count = 0;
  std::function<void(int)> rec = [&](int e) {
    if (e == E) {
      for (std::size_t i = 0; i < L.size(); ++i) {
        long s = 0;
        for (int k = 0; k < E; ++k) s += A[i][k] * l[k];
        if (s != L[i]) return;
      }
      ++count;
      return;
    }
    for (long x = 1; x <= hi[e]; ++x) {
      l[e] = x;
      rec(e + 1);
    }
  };
  rec(0);
  return count;
}

long box_multicurves(const ribbonrec::RibbonGraph& g, const std::vector<Rational>& lengths, const Rational& t,
                     long bound) {
  const int H = g.num_half_edges(), E = H / 2;
  const auto& iota = g.iota_vec();
  const auto& sigma = g.sigma_vec();
  std::vector<int> sinv(H), edge(H);
  for (int h = 0; h < H; ++h) sinv[sigma[h]] = h;
  int next = 0;
  for (int h = 0; h < H; ++h)
    if (h < iota[h]) edge[h] = edge[iota[h]] = next++;
  std::vector<int> face(H, -1);
  int F = 0;
  for (int h = 0; h < H; ++h) {
    if (face[h] >= 0) continue;
    for (int k = h; face[k] < 0; k = sigma[iota[k]]) face[k] = F;
    ++F;
  }
  std::vector<long> m(E, 0);
  long count = 0;
  std::function<void(int, Rational)> rec = [&](int e, Rational used) {
    if (used > t) return;
    if (e == E) {
      std::vector<char> zero(F, 0);
      for (int h = 0; h < H; ++h) {
        long c = m[edge[sinv[h]]] + m[edge[h]] - m[edge[sigma[h]]];
        if (c < 0 || c % 2 != 0) return;
        if (c == 0) zero[face[h]] = 1;
      }
      for (int f = 0; f < F; ++f)
        if (!zero[f]) return;
      ++count;
      return;
    }
    for (long x = 0; x <= bound; ++x) {
      m[e] = x;
      rec(e + 1, used + x * lengths[e]);
    }
    m[e] = 0;
  };
  rec(0, 0);
  return count;
}

namespace {

Integer double_factorial(int k) {
  Integer r = 1;
  for (int i = k; i > 1; i -= 2) r *= i;
  return r;
}

std::map<std::vector<int>, Rational> wk_cache;

}  // namespace

Rational wk_number(std::vector<int> d) {
  const int n = static_cast<int>(d.size());
  for (int x : d)
    if (x < 0) return 0;
  int sum = std::accumulate(d.begin(), d.end(), 0);
  if ((sum - n + 3) % 3 != 0) return 0;
  int g = (sum - n + 3) / 3;
  if (g < 0 || 2 * g - 2 + n <= 0) return 0;
  std::sort(d.begin(), d.end());
  if (auto it = wk_cache.find(d); it != wk_cache.end()) return it->second;
  Rational r = 0;
  if (g == 0 && n == 3) {
    r = (sum == 0) ? 1 : 0;
  } else if (g == 1 && n == 1) {
    r = Rational(1, 24);
  } else if (d[0] == 0) {
    // string equation
    std::vector<int> rest(d.begin() + 1, d.end());
    for (std::size_t j = 0; j < rest.size(); ++j) {
      auto e = rest;
      --e[j];
      r += wk_number(e);
    }
  } else {
    const int k = d.back() - 1;
    std::vector<int> S(d.begin(), d.end() - 1);
    Rational acc = 0;
    for (std::size_t j = 0; j < S.size(); ++j) {
      auto e = S;
      e[j] = S[j] + k;
      acc += ribbonrec::make_rational(double_factorial(2 * k + 2 * S[j] + 1), double_factorial(2 * S[j] - 1)) * wk_number(e);
    }
    for (int a = 0; a <= k - 1; ++a) {
      int b = k - 1 - a;
      Rational w = Rational(double_factorial(2 * a + 1) * double_factorial(2 * b + 1)) / 2;
      auto e = S;
      e.push_back(a);
      e.push_back(b);
      Rational split = wk_number(e);
      const int s = static_cast<int>(S.size());
      for (unsigned mask = 0; mask < (1u << s); ++mask) {
        std::vector<int> I{a}, J{b};
        for (int i = 0; i < s; ++i) (mask & (1u << i) ? I : J).push_back(S[i]);
        split += wk_number(I) * wk_number(J);
      }
      acc += w * split;
    }
    r = acc / Rational(double_factorial(2 * k + 3));
  }
  r.canonicalize();
  wk_cache.emplace(d, r);
  return r;
}

ribbonrec::Poly wk_volume(int g, int n) {
  ribbonrec::VarLayout lay{n};
  ribbonrec::Poly p(lay.arity());
  const int D = 3 * g - 3 + n;
  std::vector<int> d(n, 0);
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == n - 1) {
      d[i] = left;
      Rational c = wk_number(d);
      if (c == 0) return;
      ribbonrec::Exponent e(lay.arity(), 0);
      for (int j = 0; j < n; ++j) {
        e[j] = d[j];
        Integer den = 1;
        for (int q = 1; q <= d[j]; ++q) den *= 2 * q;
        c /= Rational(den);
      }
      p.add_term(e, c);
      return;
    }
    for (int x = 0; x <= left; ++x) {
      d[i] = x;
      rec(i + 1, left - x);
    }
  };
  rec(0, D);
  return p;
}

Rational moment_B_exact(int p, const Rational& L1, const Rational& L2) {
  std::vector<Rational> pts{0, abs(L1 - L2), L1 + L2};
  std::sort(pts.begin(), pts.end());
  Rational total = 0;
  for (std::size_t s = 0; s + 1 < pts.size(); ++s) {
    Rational a = pts[s], b = pts[s + 1];
    if (a == b) continue;
    // linear on [a,b]: B = u + v l
    Rational fa = kernel_b(L1, L2, a), fb = kernel_b(L1, L2, b);
    Rational v = (fb - fa) / (b - a), u = fa - v * a;
    total += u * (power(b, p + 1) - power(a, p + 1)) / (p + 1) + v * (power(b, p + 2) - power(a, p + 2)) / (p + 2);
  }
  return total;
}

Rational moment_C_exact(int p, int q, const Rational& L) {
  Rational total = 0;
  for (int j = 0; j <= q + 2; ++j) {
    Integer c;
    mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned>(q + 2), static_cast<unsigned>(j));
    Rational term = Rational(c) * power(L, q + 2 - j) * power(L, p + j + 1) / (p + j + 1);
    total += (j % 2 ? -term : term);
  }
  return total / ((q + 1) * (q + 2)) / L;
}

Rational bernoulli_at(int m) {
  std::vector<Rational> a(m + 1);
  for (int k = 0; k <= m; ++k) {
    a[k] = Rational(1, k + 1);
    for (int j = k; j >= 1; --j) {
      a[j - 1] = j * (a[j - 1] - a[j]);
      a[j - 1].canonicalize();
    }
  }
  return a[0];
}

ribbonrec::Poly monomial_symmetric(const std::vector<int>& lambda, int n) {
  ribbonrec::VarLayout lay{n};
  std::vector<int> e(n, 0);
  for (std::size_t i = 0; i < lambda.size(); ++i) e[i] = lambda[i];
  std::set<std::vector<int>> seen;
  std::sort(e.begin(), e.end());
  do seen.insert(e);
  while (std::next_permutation(e.begin(), e.end()));
  ribbonrec::Poly p(lay.arity());
  for (const auto& x : seen) {
    ribbonrec::Exponent f(lay.arity(), 0);
    std::copy(x.begin(), x.end(), f.begin());
    p.add_term(f, 1);
  }
  return p;
}

long stable_graph_symmetries(const ribbonrec::StableGraph& sg) {
  const int V = sg.num_vertices();
  std::vector<int> owner, partner;
  for (int u = 0; u < V; ++u)
    for (int v = u; v < V; ++v)
      for (int k = 0; k < sg.mult[u][v]; ++k) {
        int a = static_cast<int>(owner.size());
        owner.push_back(u);
        owner.push_back(v);
        partner.push_back(a + 1);
        partner.push_back(a);
      }
  const int H = static_cast<int>(owner.size());
  std::vector<int> pi(V);
  std::iota(pi.begin(), pi.end(), 0);
  long total = 0;
  do {
    bool ok = true;
    for (int v = 0; v < V && ok; ++v) ok = sg.genus[pi[v]] == sg.genus[v];
    for (int l : sg.leaf_vertex) ok = ok && pi[l] == l;
    if (!ok) continue;
    std::vector<int> img(H, -1);
    std::vector<char> taken(H, 0);
    std::function<void(int)> rec = [&](int h) {
      if (h == H) {
        ++total;
        return;
      }
      if (img[h] >= 0) {
        rec(h + 1);
        return;
      }
      for (int k = 0; k < H; ++k) {
        if (taken[k] || owner[k] != pi[owner[h]]) continue;
        int hp = partner[h], kp = partner[k];
        if (taken[kp]) continue;
        if (owner[kp] != pi[owner[hp]]) continue;
        img[h] = k;
        img[hp] = kp;
        taken[k] = taken[kp] = 1;
        rec(h + 1);
        taken[k] = taken[kp] = 0;
        img[h] = img[hp] = -1;
      }
    };
    rec(0);
  } while (std::next_permutation(pi.begin(), pi.end()));
  return total;
}

}  // namespace oracle
