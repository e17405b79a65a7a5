#include "ribbonrec/pants.hpp"

#include <algorithm>
#include <stdexcept>

namespace ribbonrec {

Rational kernel_B(const Rational& L1, const Rational& L2, const Rational& ell) {
  if (L1 == 0) throw std::invalid_argument("kernel_B requires L1 > 0");
  Rational r = positive_part(L1 - L2 - ell) - positive_part(-L1 + L2 - ell) + positive_part(L1 + L2 - ell);
  return r / (2 * L1);
}

Rational kernel_C(const Rational& L1, const Rational& ell, const Rational& ellp) {
  if (L1 == 0) throw std::invalid_argument("kernel_C requires L1 > 0");
  return positive_part(L1 - ell - ellp) / L1;
}

Rational seam_length(const Rational& L1, const Rational& L2, const Rational& L3, SeamKind kind) {
  if (kind == SeamKind::Between12) return positive_part((L3 - L1 - L2) / 2);
  Rational a = (L2 + L3 - L1) / 2;
  return std::max({a, Rational(L2 - L1), Rational(L3 - L1), Rational(0)});
}

PantsCell classify_pants(const Rational& L1, const Rational& L2, const Rational& L3) {
  if (L1 >= L2 + L3) return PantsCell::Big1;
  if (L2 >= L1 + L3) return PantsCell::Big2;
  if (L3 >= L1 + L2) return PantsCell::Big3;
  return PantsCell::Theta;
}

namespace {

// The face walk of `label` rotated so that it starts right after position i.
EdgeWord rotate_after(const EdgeWord& f, std::size_t i) {
  EdgeWord w;
  for (std::size_t k = 1; k < f.size(); ++k) w.push_back(f[(i + k) % f.size()]);
  return w;
}

std::size_t index_in(const EdgeWord& f, int h) {
  auto it = std::find(f.begin(), f.end(), h);
  if (it == f.end()) throw std::logic_error("half-edge not on face");
  return static_cast<std::size_t>(it - f.begin());
}

bool is_boundary_curve(const RibbonGraph& g, const EdgeWord& w, int except) {
  for (int l = 0; l < g.num_faces(); ++l) {
    if (l == except) continue;
    if (same_curve(g, w, g.face(l))) return true;
  }
  return false;
}

}  // namespace

DualArcPants dual_arc_pants(const RibbonGraph& g, const std::vector<Rational>& lengths, int edge, int from) {
  if (!g.is_trivalent()) throw std::invalid_argument("dual arc pants require a trivalent graph");
  auto L = g.perimeters(lengths);
  int h = g.edge_half(edge);
  if (g.label_of(h) != from) h = g.iota(h);
  if (g.label_of(h) != from) throw std::invalid_argument("edge does not border the face");
  DualArcPants p;
  p.edge = edge;
  p.from = from;
  p.L1 = L[from];
  const EdgeWord& f1 = g.face(from);
  int k = g.iota(h);
  if (g.label_of(k) != from) {
    p.other = g.label_of(k);
    p.L2 = L[p.other];
    EdgeWord w = rotate_after(f1, index_in(f1, h));
    const EdgeWord& fm = g.face(p.other);
    EdgeWord y = rotate_after(fm, index_in(fm, k));
    w.insert(w.end(), y.begin(), y.end());
    p.curve_a = cyclic_reduce(g, w);
    p.ell_a = word_length(g, p.curve_a, lengths);
    return p;
  }
  std::size_t i = index_in(f1, h), j = index_in(f1, k);
  const std::size_t n = f1.size();
  EdgeWord c2, c3;
  for (std::size_t x = (i + 1) % n; x != j; x = (x + 1) % n) c2.push_back(f1[x]);
  for (std::size_t x = (j + 1) % n; x != i; x = (x + 1) % n) c3.push_back(f1[x]);
  p.curve_a = cyclic_reduce(g, c2);
  p.curve_b = cyclic_reduce(g, c3);
  p.ell_a = word_length(g, p.curve_a, lengths);
  p.ell_b = word_length(g, p.curve_b, lengths);
  p.peripheral = is_boundary_curve(g, p.curve_a, from) || is_boundary_curve(g, p.curve_b, from);
  return p;
}

Rational reconstruct_edge_length(const DualArcPants& arc) {
  if (arc.other >= 0) return arc.L1 * (kernel_B(arc.L1, arc.L2, arc.ell_a) - kernel_C(arc.L1, arc.L2, arc.ell_a));
  return arc.L1 * kernel_C(arc.L1, arc.ell_a, arc.ell_b) / 2;
}

McShaneResult mcshane_check(const RibbonGraph& g, const std::vector<Rational>& lengths) {
  if (!g.is_trivalent()) throw std::invalid_argument("mcshane_check requires a trivalent graph");
  if (g.face(0).empty()) throw std::invalid_argument("face 1 is empty");
  if (2 * g.genus() - 2 + g.num_faces() < 2)
    throw std::invalid_argument("mcshane_check needs Euler characteristic below -1; use mcshane_torus for (1,1)");
  McShaneResult r;
  r.total = 0;
  std::vector<char> done(g.num_edges(), 0);
  for (int h : g.face(0)) {
    int e = g.edge_of(h);
    if (done[e]) continue;
    done[e] = 1;
    DualArcPants p = dual_arc_pants(g, lengths, e, 0);
    McShaneTerm t{e, "", 0};
    if (p.other >= 0) {
      t.kind = "B";
      t.value = kernel_B(p.L1, p.L2, p.ell_a);
    } else if (p.peripheral) {
      t.kind = "skip";
    } else {
      t.kind = "C";
      t.value = kernel_C(p.L1, p.ell_a, p.ell_b);
    }
    r.total += t.value;
    r.terms.push_back(t);
  }
  return r;
}

McShaneResult mcshane_torus(const RibbonGraph& g, const std::vector<Rational>& lengths) {
  if (!g.is_trivalent() || g.genus() != 1 || g.num_faces() != 1)
    throw std::invalid_argument("mcshane_torus requires a trivalent (1,1) graph");
  Rational L = g.perimeters(lengths)[0];
  McShaneResult r;
  r.total = 0;
  enumerate_multicurves<Rational>(g, lengths, L / 2, true, [&](const std::vector<long>& m) {
    bool nonzero = std::any_of(m.begin(), m.end(), [](long x) { return x != 0; });
    if (!nonzero) return;
    if (trace_components(g, m).size() != 1) return;
    Rational ell = 0;
    for (int e = 0; e < g.num_edges(); ++e) ell += lengths[e] * m[e];
    McShaneTerm t{-1, "C", kernel_C(L, ell, ell)};
    r.total += t.value;
    r.terms.push_back(t);
  });
  return r;
}

}  // namespace ribbonrec
