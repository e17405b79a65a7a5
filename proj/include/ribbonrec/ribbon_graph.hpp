#pragma once

#include "ribbonrec/rational.hpp"

#include <cstdint>
#include <vector>

namespace ribbonrec {

// Half-edges 0..2E-1. iota pairs half-edges into edges, sigma rotates around
// vertices. Faces are the orbits of the walk h -> sigma(iota(h)); the oriented
// edge h runs from vertex_of(h) to vertex_of(iota(h)).
class RibbonGraph {
 public:
  RibbonGraph() = default;
  // face_labels[h] in 0..n-1, constant along each face walk.
  RibbonGraph(std::vector<int> iota, std::vector<int> sigma, std::vector<int> face_labels);

  int num_half_edges() const { return static_cast<int>(iota_.size()); }
  int num_edges() const { return num_half_edges() / 2; }
  int num_vertices() const { return static_cast<int>(vertices_.size()); }
  int num_faces() const { return static_cast<int>(faces_.size()); }
  int genus() const;
  int boundaries() const { return num_faces(); }

  int iota(int h) const { return iota_[h]; }
  int sigma(int h) const { return sigma_[h]; }
  int sigma_inv(int h) const { return sigma_inv_[h]; }
  int vertex_of(int h) const { return vertex_of_[h]; }
  int edge_of(int h) const { return edge_of_[h]; }
  int edge_half(int e) const { return edge_half_[e]; }  // smaller half-edge of edge e
  int label_of(int h) const { return label_of_[h]; }    // face label 0..n-1 of h
  // Face walks indexed by label.
  const std::vector<int>& face(int label) const { return faces_[label]; }
  const std::vector<std::vector<int>>& faces() const { return faces_; }
  const std::vector<std::vector<int>>& vertices() const { return vertices_; }
  const std::vector<int>& iota_vec() const { return iota_; }
  const std::vector<int>& sigma_vec() const { return sigma_; }
  const std::vector<int>& labels() const { return label_of_; }

  bool is_trivalent() const;
  bool is_loop(int e) const { return vertex_of(edge_half(e)) == vertex_of(iota(edge_half(e))); }
  // n x E matrix of edge multiplicities around each face.
  std::vector<std::vector<int>> adjacency() const;
  std::vector<Rational> perimeters(const std::vector<Rational>& lengths) const;

  bool operator==(const RibbonGraph& o) const;

 private:
  void derive();
  std::vector<int> iota_, sigma_, sigma_inv_, label_of_;
  std::vector<int> vertex_of_, edge_of_, edge_half_;
  std::vector<std::vector<int>> faces_, vertices_;
};

using CanonCode = std::vector<int>;

struct Canonical {
  RibbonGraph graph;  // relabelled representative
  CanonCode code;
  int aut = 0;        // number of label-preserving automorphisms
};

// Isomorphisms commute with iota and sigma and preserve face labels.
Canonical canonical_form(const RibbonGraph& g);
// Same but ignores face labels.
CanonCode unlabeled_code(const RibbonGraph& g);
// All label-preserving automorphisms as half-edge permutations.
std::vector<std::vector<int>> automorphisms(const RibbonGraph& g);
// Renumbers half-edges: new index of h is perm[h].
RibbonGraph relabel(const RibbonGraph& g, const std::vector<int>& perm);
// Contracts a non-loop edge, merging the cyclic orders at its ends.
RibbonGraph contract_edge(const RibbonGraph& g, int e);

struct GraphClass {
  RibbonGraph graph;
  CanonCode code;
  int aut = 0;
};

// Throws std::invalid_argument for unstable (g,n) or more than 15 edges.
std::vector<GraphClass> enumerate_trivalent(int g, int n);
std::vector<GraphClass> enumerate_all_cells(int g, int n);

// Theta graph on three labelled faces; trivalent (1,1) graph; two-edge (1,1) graph.
RibbonGraph theta_graph();
RibbonGraph torus_graph();
RibbonGraph torus_two_edge_graph();

struct DetCheck {
  std::vector<int> subset;  // edge ids S, |S| = n
  Integer det;
};

// Finds S whose dual subgraph on the faces is connected with a single odd cycle.
// Throws std::runtime_error if none exists.
DetCheck adjacency_det_check(const RibbonGraph& g);
// Exact determinant of an integer square matrix.
Integer integer_determinant(std::vector<std::vector<Integer>> m);

struct IntegerMetric {
  std::vector<Integer> lengths;  // per edge id
  int aut = 1;                   // automorphisms of the metric graph
};

std::vector<IntegerMetric> integer_metrics(const RibbonGraph& g, const std::vector<Integer>& L);
// Sum over solutions of 1/aut(G) = sum over metric points of 1/aut(G, metric).
Rational weighted_lattice_count(const std::vector<GraphClass>& cells, const std::vector<Integer>& L);

// Solves for the S-edge lengths given the other edge lengths and perimeters.
std::vector<Rational> solve_subset_lengths(const RibbonGraph& g, const std::vector<int>& subset,
                                           const std::vector<Rational>& lengths,
                                           const std::vector<Rational>& L);

}  // namespace ribbonrec
