#pragma once

#include "ribbonrec/poly.hpp"

#include <vector>

namespace ribbonrec {

struct StableGraph {
  std::vector<int> genus;              // per vertex
  std::vector<int> leaf_vertex;        // vertex carrying leaf i
  std::vector<std::vector<int>> mult;  // symmetric edge multiplicities, diagonal = loops

  int num_vertices() const { return static_cast<int>(genus.size()); }
  int num_edges() const;
  int valence(int v) const;
  int total_genus() const;
  bool operator==(const StableGraph& o) const = default;
};

struct StableGraphClass {
  StableGraph graph;
  long aut = 1;
};

// Complete duplicate-free list, including the graph with no edges.
std::vector<StableGraphClass> enumerate_stable_graphs(int g, int n);
long stable_graph_aut(const StableGraph& sg);

enum class EdgeWeight { Zeta, Bgn };

// Contribution of one graph with the zeta edge weight: a polynomial in Lsq, PiSq, SInv.
Poly stable_graph_term(const StableGraph& sg, int n);
// Zeta: the Masur-Veech polynomial. Bgn: its L = 0, s = 1 specialization in the 0-boundary layout.
Poly stable_graph_sum(int g, int n, EdgeWeight w);

Integer mv_const_a(int g, int n);
Rational mv_const_a_prime(int g, int n);

// Both volumes are multiples of PiSq^(3g-3+n) in the zero-boundary layout.
struct MvVolume {
  Poly from_recursion;     // a' * constant term of the twisted-recursion polynomial at s = 1
  Poly from_stable_graphs; // a * top t-coefficient of the stable-graph counting polynomial
  bool agree = false;
};

// Throws for (0,3) where a' is undefined.
MvVolume mv_volume(int g, int n);

}  // namespace ribbonrec
