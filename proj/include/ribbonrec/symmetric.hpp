#pragma once

#include "ribbonrec/poly.hpp"

#include <string>
#include <vector>

namespace ribbonrec {

using Partition = std::vector<int>;

// One entry of the decomposition m_lambda * PiSq^a * Tsq^b * SInv^c * coeff.
struct SymTerm {
  Partition partition;
  int pisq = 0;
  int tsq = 0;
  int sinv = 0;
  Rational coeff;
  bool operator==(const SymTerm& o) const;
};

// Orbit sum of the monomial with exponent partition lambda over n variables.
Poly expand_symmetric(const Partition& lambda, int boundaries);
// Throws std::invalid_argument if p is not symmetric in Lsq_1..Lsq_n.
std::vector<SymTerm> render_symmetric(const Poly& p, int boundaries);
Poly expand_terms(const std::vector<SymTerm>& terms, int boundaries);

// Table-style rendering, e.g. "\tfrac{1}{48} m_{(1)} + \tfrac{\pi^2 t^2}{24}".
std::string to_latex(const std::vector<SymTerm>& terms);
std::string to_plain(const std::vector<SymTerm>& terms);

}  // namespace ribbonrec
