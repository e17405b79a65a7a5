#pragma once

#include "ribbonrec/curves.hpp"

#include <string>
#include <vector>

namespace ribbonrec {

Rational kernel_B(const Rational& L1, const Rational& L2, const Rational& ell);
Rational kernel_C(const Rational& L1, const Rational& ell, const Rational& ellp);

enum class SeamKind { Between12, Self1 };
Rational seam_length(const Rational& L1, const Rational& L2, const Rational& L3, SeamKind kind);

enum class PantsCell { Theta, Big1, Big2, Big3 };
// Big_i when L_i >= L_j + L_k (the first such index on walls).
PantsCell classify_pants(const Rational& L1, const Rational& L2, const Rational& L3);

// Pair of pants obtained from an edge seen from face `from`.
struct DualArcPants {
  int edge = -1;
  int from = 0;            // face label carrying boundary 1
  int other = -1;          // face label across the edge, -1 when both sides are `from`
  EdgeWord curve_a;        // third boundary, or first sub-curve for a same-face edge
  EdgeWord curve_b;        // second sub-curve for a same-face edge
  Rational L1, L2;         // perimeters of `from` and `other`
  Rational ell_a, ell_b;   // lengths of curve_a and curve_b
  bool peripheral = false; // a sub-curve is a boundary of another face
};

DualArcPants dual_arc_pants(const RibbonGraph& g, const std::vector<Rational>& lengths, int edge, int from);
Rational reconstruct_edge_length(const DualArcPants& arc);

struct McShaneTerm {
  int edge;
  std::string kind;  // "B", "C" or "skip"
  Rational value;
};

struct McShaneResult {
  std::vector<McShaneTerm> terms;
  Rational total;
};

// Sum over the edges bounding face 0 of the pants contributions. Requires
// 2g-2+n >= 2.
McShaneResult mcshane_check(const RibbonGraph& g, const std::vector<Rational>& lengths);
// One-holed torus: sum of C(L, l(gamma), l(gamma)) over simple curves with 2 l(gamma) < L.
McShaneResult mcshane_torus(const RibbonGraph& g, const std::vector<Rational>& lengths);

}  // namespace ribbonrec
