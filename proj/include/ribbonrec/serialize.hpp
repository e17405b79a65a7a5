#pragma once

#include "ribbonrec/poly.hpp"
#include "ribbonrec/ribbon_graph.hpp"
#include "ribbonrec/stable_graphs.hpp"

#include <json.hpp>

#include <vector>

namespace ribbonrec {

using Json = nlohmann::json;

// {"vars": [...], "terms": [{"exp": [...], "num": "..", "den": ".."}]}
Json poly_to_json(const Poly& p, const VarLayout& layout);
Poly poly_from_json(const Json& j);

// {"n_half_edges", "iota", "sigma_cycles", "face_labels": {"1": [face walk], ...}}
Json graph_to_json(const RibbonGraph& g);
RibbonGraph graph_from_json(const Json& j);

// {"lengths": ["p/q", ...]}
Json metric_to_json(const std::vector<Rational>& lengths);
std::vector<Rational> metric_from_json(const Json& j);
Json integer_metric_to_json(const IntegerMetric& m);
IntegerMetric integer_metric_from_json(const Json& j);

// {"vertices": [{"genus", "leaves"}], "edges": [[u, v], ...], "aut"}
Json stable_graph_to_json(const StableGraphClass& c);
StableGraphClass stable_graph_from_json(const Json& j, int n);

}  // namespace ribbonrec
