#include "ribbonrec/recursion.hpp"

#include "ribbonrec/pants.hpp"
#include "ribbonrec/zeta.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace ribbonrec {

namespace {

void check_stable(int g, int n) {
  if (g < 0 || n < 1 || 2 * g - 2 + n <= 0) throw std::invalid_argument("unstable type (g,n)");
}

// Splits p by the power of variable `var` (always even powers of L, so powers of Lsq).
std::map<int, Poly> split_by(const Poly& p, std::size_t var) {
  std::map<int, Poly> out;
  for (const auto& [e, c] : p.terms()) {
    Exponent f = e;
    int k = f[var];
    f[var] = 0;
    auto it = out.find(k);
    if (it == out.end()) it = out.emplace(k, Poly(p.arity())).first;
    it->second.add_term(f, c);
  }
  return out;
}

// Map from a source layout with `from` boundaries into one with `to`
// boundaries: boundary i goes to targets[i], the three trailing variables follow.
std::vector<std::size_t> layout_map(int from, int to, const std::vector<std::size_t>& targets) {
  std::vector<std::size_t> map(targets);
  VarLayout dst{to};
  map.resize(static_cast<std::size_t>(from) + 3);
  map[from] = dst.pisq();
  map[from + 1] = dst.tsq();
  map[from + 2] = dst.sinv();
  return map;
}

std::mutex cache_lock;
std::map<std::tuple<int, int, int>, Poly> amp_cache;
std::map<int, Poly> mb_cache;
std::map<std::tuple<int, int, int>, Poly> mc_cache;
std::map<std::pair<int, std::vector<long>>, Rational> disc_cache;

Poly cached_moment_B(int k) {
  {
    std::lock_guard<std::mutex> g(cache_lock);
    auto it = mb_cache.find(k);
    if (it != mb_cache.end()) return it->second;
  }
  Poly p = moment_B(k);
  std::lock_guard<std::mutex> g(cache_lock);
  mb_cache.emplace(k, p);
  return p;
}

// Moment of the (possibly twisted) C kernel, in the 1-boundary layout.
Poly c_moment(Flavor fl, int a, int b) {
  auto key = std::make_tuple(static_cast<int>(fl), a, b);
  {
    std::lock_guard<std::mutex> g(cache_lock);
    auto it = mc_cache.find(key);
    if (it != mc_cache.end()) return it->second;
  }
  Poly p = moment_C(a, b);
  if (fl == Flavor::Twisted) {
    // B(L1,l,l') f(l) and B(L1,l',l) f(l'), then f(l) f(l').
    auto cross = [&](int outer, int inner) {
      Poly r(4);
      Poly mb = cached_moment_B(inner);
      for (const auto& [e, c] : mb.terms()) {
        Exponent x(4, 0);
        x[0] = e[0];
        r += Poly::monomial(x, c) * zeta_moment(outer + e[1], 1);
      }
      return r;
    };
    p += cross(a, b);
    p += cross(b, a);
    p += zeta_moment(a, 1) * zeta_moment(b, 1);
  }
  std::lock_guard<std::mutex> g(cache_lock);
  mc_cache.emplace(key, p);
  return p;
}

Poly amplitude(Flavor fl, int g, int n);

Poly compute_amplitude(Flavor fl, int g, int n) {
  VarLayout lay{n};
  const std::size_t A = lay.arity();
  if (g == 0 && n == 3) return Poly::constant(A, 1);
  if (g == 1 && n == 1) {
    Poly p = Poly::variable(A, lay.lsq(0)) * Rational(1, 48);
    if (fl == Flavor::Twisted) p += zeta_moment(0, 1) * Rational(1, 2);
    return p;
  }
  Poly total(A);
  // Terms where boundary 1 and boundary m bound a pair of pants.
  for (int m = 1; m < n; ++m) {
    if (!(2 * g - 2 + (n - 1) > 0)) break;
    Poly w = amplitude(fl, g, n - 1);
    std::vector<std::size_t> targets{0};
    for (int j = 1; j < n; ++j)
      if (j != m) targets.push_back(static_cast<std::size_t>(j));
    auto parts = split_by(w, 0);
    for (const auto& [k, coef] : parts) {
      Poly moved = coef.remap(A, layout_map(n - 1, n, targets));
      Poly mb = cached_moment_B(k).remap(A, layout_map(2, n, {0, static_cast<std::size_t>(m)}));
      if (fl == Flavor::Twisted) mb += zeta_moment(k, n);
      total += moved * mb;
    }
  }
  // Terms where boundary 1 and two interior curves bound a pair of pants.
  Poly inner(A);
  auto add_pair = [&](const std::map<int, Poly>& P, const std::map<int, Poly>& Q) {
    for (const auto& [a, pa] : P) {
      Poly acc(A);
      for (const auto& [b, qb] : Q) acc += qb * c_moment(fl, a, b).remap(A, layout_map(1, n, {0}));
      inner += pa * acc;
    }
  };
  if (g >= 1) {
    Poly w = amplitude(fl, g - 1, n + 1);
    // w in (l, l', L_2..L_n): nest the split over l then l'.
    std::vector<std::size_t> targets{0, 0};
    for (int j = 1; j < n; ++j) targets.push_back(static_cast<std::size_t>(j));
    auto map = layout_map(n + 1, n, targets);
    for (const auto& [a, wa] : split_by(w, 0)) {
      for (const auto& [b, wab] : split_by(wa, 1)) {
        Poly moved = wab.remap(A, map);
        inner += moved * c_moment(fl, a, b).remap(A, layout_map(1, n, {0}));
      }
    }
  }
  const int rest = n - 1;
  for (int h = 0; h <= g; ++h) {
    int hp = g - h;
    for (unsigned mask = 0; mask < (1u << rest); ++mask) {
      std::vector<std::size_t> J{0}, Jp{0};
      for (int j = 0; j < rest; ++j) {
        if (mask & (1u << j))
          J.push_back(static_cast<std::size_t>(j + 1));
        else
          Jp.push_back(static_cast<std::size_t>(j + 1));
      }
      int n1 = static_cast<int>(J.size()), n2 = static_cast<int>(Jp.size());
      if (2 * h - 2 + n1 <= 0 || 2 * hp - 2 + n2 <= 0) continue;
      Poly p = amplitude(fl, h, n1), q = amplitude(fl, hp, n2);
      // variable 0 of each factor is the interior curve; park it on slot 0 and split first.
      auto P = split_by(p, 0), Q = split_by(q, 0);
      std::map<int, Poly> Pm, Qm;
      for (auto& [k, c] : P) Pm.emplace(k, c.remap(A, layout_map(n1, n, J)));
      for (auto& [k, c] : Q) Qm.emplace(k, c.remap(A, layout_map(n2, n, Jp)));
      add_pair(Pm, Qm);
    }
  }
  total += inner * Rational(1, 2);
  return total;
}

Poly amplitude(Flavor fl, int g, int n) {
  check_stable(g, n);
  auto key = std::make_tuple(static_cast<int>(fl), g, n);
  {
    std::lock_guard<std::mutex> lk(cache_lock);
    auto it = amp_cache.find(key);
    if (it != amp_cache.end()) return it->second;
  }
  Poly p = compute_amplitude(fl, g, n);
  std::lock_guard<std::mutex> lk(cache_lock);
  amp_cache.emplace(key, p);
  return p;
}

}  // namespace

Poly moment_B(int k) {
  if (k < 0) throw std::invalid_argument("negative moment index");
  VarLayout lay{2};
  Poly p(lay.arity());
  const unsigned N = static_cast<unsigned>(2 * k + 3);
  Rational denom = Rational((2 * k + 2) * (2 * k + 3));
  for (unsigned i = 0; i < N; i += 2) {
    Exponent e(lay.arity(), 0);
    e[0] = static_cast<int>((N - 1 - i) / 2);
    e[1] = static_cast<int>(i / 2);
    p.add_term(e, Rational(binomial(N, i)) / denom);
  }
  return p;
}

Poly moment_C(int a, int b) {
  if (a < 0 || b < 0) throw std::invalid_argument("negative moment index");
  VarLayout lay{1};
  Exponent e(lay.arity(), 0);
  e[0] = a + b + 2;
  Rational c = Rational(factorial(2 * a + 1) * factorial(2 * b + 1)) / Rational(factorial(2 * a + 2 * b + 5));
  return Poly::monomial(e, c);
}

Poly zeta_moment(int k, int boundaries) {
  VarLayout lay{boundaries};
  Exponent e(lay.arity(), 0);
  e[lay.pisq()] = k + 1;
  e[lay.sinv()] = 2 * k + 2;
  return Poly::monomial(e, Rational(factorial(2 * k + 1)) * zeta_even_coeff(static_cast<unsigned>(k + 1)));
}

Poly vk(int g, int n) { return amplitude(Flavor::Kontsevich, g, n); }

Poly mv_poly_recursion(int g, int n) { return amplitude(Flavor::Twisted, g, n); }

Poly laplace_invert(const Poly& mv, int n) {
  VarLayout lay{n};
  Poly out(lay.arity());
  for (const auto& [e, c] : mv.terms()) {
    int s = e[lay.sinv()];
    if (s % 2 != 0 || e[lay.tsq()] != 0) throw std::invalid_argument("not a Masur-Veech polynomial");
    Exponent f = e;
    f[lay.sinv()] = 0;
    f[lay.tsq()] = s / 2;
    out.add_term(f, c / Rational(factorial(static_cast<unsigned>(s))));
  }
  return out;
}

TwistedResult twisted_vn(int g, int n) {
  Poly mv = mv_poly_recursion(g, n);
  return {mv, laplace_invert(mv, n)};
}

namespace {

Rational disc(int g, const std::vector<long>& L);

Rational disc_compute(int g, const std::vector<long>& L) {
  const int n = static_cast<int>(L.size());
  long sum = 0;
  for (long x : L) sum += x;
  if (sum % 2 != 0) return 0;
  if (g == 0 && n == 3) return 1;
  const Rational L1(L[0]);
  if (g == 1 && n == 1) {
    Rational s = 0;
    for (long l = 1; 2 * l <= L[0]; ++l) s += Rational(l) * kernel_C(L1, l, l);
    return s / 2;
  }
  Rational total = 0;
  if (2 * g - 2 + (n - 1) > 0) {
    for (int m = 1; m < n; ++m) {
      std::vector<long> arg{0};
      for (int j = 1; j < n; ++j)
        if (j != m) arg.push_back(L[j]);
      for (long l = 1; l < L[0] + L[m]; ++l) {
        if ((L[0] + L[m] + l) % 2 != 0) continue;
        Rational b = kernel_B(L1, Rational(L[m]), Rational(l));
        if (b == 0) continue;
        arg[0] = l;
        total += Rational(l) * b * disc(g, arg);
      }
    }
  }
  Rational inner = 0;
  for (long l = 1; l < L[0]; ++l)
    for (long lp = 1; l + lp < L[0]; ++lp) {
      if ((L[0] + l + lp) % 2 != 0) continue;
      Rational c = kernel_C(L1, l, lp);
      Rational bracket = 0;
      if (g >= 1) {
        std::vector<long> arg{l, lp};
        for (int j = 1; j < n; ++j) arg.push_back(L[j]);
        bracket += disc(g - 1, arg);
      }
      const int rest = n - 1;
      for (int h = 0; h <= g; ++h)
        for (unsigned mask = 0; mask < (1u << rest); ++mask) {
          std::vector<long> a1{l}, a2{lp};
          for (int j = 0; j < rest; ++j) (mask & (1u << j) ? a1 : a2).push_back(L[j + 1]);
          int n1 = static_cast<int>(a1.size()), n2 = static_cast<int>(a2.size());
          if (2 * h - 2 + n1 <= 0 || 2 * (g - h) - 2 + n2 <= 0) continue;
          bracket += disc(h, a1) * disc(g - h, a2);
        }
      inner += Rational(l * lp) * c * bracket;
    }
  total += inner / 2;
  return total;
}

Rational disc(int g, const std::vector<long>& L) {
  std::vector<long> key = L;
  std::sort(key.begin(), key.end());
  auto k = std::make_pair(g, key);
  {
    std::lock_guard<std::mutex> lk(cache_lock);
    auto it = disc_cache.find(k);
    if (it != disc_cache.end()) return it->second;
  }
  Rational v = disc_compute(g, L);
  std::lock_guard<std::mutex> lk(cache_lock);
  disc_cache.emplace(k, v);
  return v;
}

}  // namespace

Rational discrete_n(int g, const std::vector<long>& L) {
  check_stable(g, static_cast<int>(L.size()));
  for (long x : L)
    if (x < 1) throw std::invalid_argument("lattice perimeters must be positive");
  return disc(g, L);
}

void clear_recursion_caches() {
  std::lock_guard<std::mutex> lk(cache_lock);
  amp_cache.clear();
  mb_cache.clear();
  mc_cache.clear();
  disc_cache.clear();
}

}  // namespace ribbonrec
