#pragma once

#include "ribbonrec/poly.hpp"

namespace ribbonrec {

Rational bernoulli(unsigned m);
// zeta(2k) / pi^(2k) as an exact rational.
Rational zeta_even_coeff(unsigned k);
// zeta(2k) as a rational multiple of PiSq^k in the standard layout.
Poly zeta_even(int k, int boundaries = 0);

}  // namespace ribbonrec
