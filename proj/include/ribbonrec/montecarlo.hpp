#pragma once

#include "ribbonrec/ribbon_graph.hpp"

#include <cstdint>
#include <vector>

namespace ribbonrec {

enum class Observable { One, MulticurveCount };

struct McResult {
  double estimate = 0;
  double std_error = 0;
  long samples = 0;
};

// Integral over the combinatorial moduli space with fixed perimeters of the
// observable against the Kontsevich measure, summing top cells with weight 1/Aut.
// Supported types: (1,1) and (0,4).
McResult mc_average(int g, int n, const std::vector<double>& L, Observable obs, double t, long samples,
                    std::uint64_t seed);

// Closed-form volume of the (1,1) top cell slice: (L^2/8) / 6.
Rational exact_volume_11(const Rational& L);

}  // namespace ribbonrec
