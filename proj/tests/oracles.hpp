#pragma once

// Brute-force references kept independent of the library algorithms they check.

#include "ribbonrec/poly.hpp"
#include "ribbonrec/ribbon_graph.hpp"
#include "ribbonrec/stable_graphs.hpp"

#include <map>
#include <random>
#include <vector>

namespace oracle {

using ribbonrec::Integer;
using ribbonrec::Rational;

// Sum over labelled ribbon graphs of type (g,n) with exactly E edges and all
// valences >= min_valence (and <= max_valence) of 1/#Aut, via the mass formula
// #{(sigma, labels)} / (2^E E!) at a fixed edge involution.
Rational ribbon_mass(int g, int n, int E, int min_valence, int max_valence);

// Number of positive integer solutions of A l = L, by box search.
long box_lattice_solutions(const ribbonrec::RibbonGraph& g, const std::vector<long>& L);

// #{m in [0, bound]^E in the multicurve lattice with sum m_e l_e <= t}; corners
// are read off the rotation directly.
long box_multicurves(const ribbonrec::RibbonGraph& g, const std::vector<Rational>& lengths, const Rational& t,
                     long bound);

// Witten-Kontsevich numbers <tau_{d_1} ... tau_{d_n}>_g by the DVV recursion.
Rational wk_number(std::vector<int> d);
// Kontsevich volume sum_d <tau_d> prod L_i^{2 d_i} / (2^{d_i} d_i!) in the standard layout.
ribbonrec::Poly wk_volume(int g, int n);

// Exact integral of l^p * B(L1, L2, l) over l > 0 by piecewise integration.
Rational moment_B_exact(int p, const Rational& L1, const Rational& L2);
// Exact double integral of l^p l'^q C(L1, l, l').
Rational moment_C_exact(int p, int q, const Rational& L1);

// Bernoulli numbers by the Akiyama-Tanigawa algorithm (B_1 = +1/2 convention).
Rational bernoulli_at(int m);

// Expansion of m_lambda by listing distinct permutations of the padded exponent.
ribbonrec::Poly monomial_symmetric(const std::vector<int>& lambda, int n);

// Number of symmetries of a stable graph counted on half-edges.
long stable_graph_symmetries(const ribbonrec::StableGraph& sg);

// Positive rational edge lengths p/q with p, q in [1, max].
inline std::vector<Rational> random_lengths(int E, std::mt19937_64& rng, int max = 20) {
  std::uniform_int_distribution<int> d(1, max);
  std::vector<Rational> out;
  for (int e = 0; e < E; ++e) out.push_back(ribbonrec::make_rational(d(rng), d(rng)));
  return out;
}

}  // namespace oracle
