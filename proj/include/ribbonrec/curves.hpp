#pragma once

#include "ribbonrec/ribbon_graph.hpp"

#include <functional>
#include <vector>

namespace ribbonrec {

// Cyclic sequence of oriented edges (half-edges); h is traversed from
// vertex_of(h) to vertex_of(iota(h)).
using EdgeWord = std::vector<int>;

bool is_closed_path(const RibbonGraph& g, const EdgeWord& w);
// Removes backtracks, including across the wrap-around.
EdgeWord cyclic_reduce(const RibbonGraph& g, const EdgeWord& w);
EdgeWord reverse_word(const RibbonGraph& g, const EdgeWord& w);
bool same_cyclic_word(const EdgeWord& a, const EdgeWord& b);
// Equal up to rotation and reversal.
bool same_curve(const RibbonGraph& g, const EdgeWord& a, const EdgeWord& b);
Rational word_length(const RibbonGraph& g, const EdgeWord& w, const std::vector<Rational>& lengths);

struct ReducedCurve {
  EdgeWord word;
  Rational length;
};

// Throws std::invalid_argument if w is not a closed edge path.
ReducedCurve reduce_and_length(const RibbonGraph& g, const EdgeWord& w, const std::vector<Rational>& lengths);

// Corner value at vertex_of(h) between sigma^{-1}(h) and h; the corner lies on
// the face of h.
long corner_value(const RibbonGraph& g, const std::vector<long>& m, int h);
bool zg_membership(const RibbonGraph& g, const std::vector<long>& m);
// Components of the multicurve, one word per parallel copy.
std::vector<EdgeWord> trace_components(const RibbonGraph& g, const std::vector<long>& m);

// Visits every m in Z_G with sum m_e l_e <= budget (or < budget when strict).
template <typename T>
void enumerate_multicurves(const RibbonGraph& g, const std::vector<T>& lengths, const T& budget, bool strict,
                           const std::function<void(const std::vector<long>&)>& visit);

Integer count_multicurves(const RibbonGraph& g, const std::vector<Rational>& lengths, const Rational& t);
long count_multicurves_fast(const RibbonGraph& g, const std::vector<double>& lengths, double t);

struct GrowthPoint {
  Rational t;
  Integer count;
  double ratio;
};

// count(t) / t^(6g-6+2n) at each requested t.
std::vector<GrowthPoint> growth_estimate(const RibbonGraph& g, const std::vector<Rational>& lengths,
                                         const std::vector<Rational>& ts);

}  // namespace ribbonrec
