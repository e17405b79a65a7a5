#pragma once

#include "ribbonrec/poly.hpp"

#include <utility>
#include <vector>

namespace ribbonrec {

enum class Flavor { Kontsevich, Twisted };

// Integral of B(L1,L2,l) l^(2k+1) dl as a polynomial in Lsq_1, Lsq_2 (layout with 2 boundaries).
Poly moment_B(int k);
// Double integral of C(L1,l,l') l^(2a+1) l'^(2b+1) as a polynomial in Lsq_1 (layout with 1 boundary).
Poly moment_C(int a, int b);
// Integral of l^(2k+1) / (e^{s l} - 1) dl in PiSq and SInv (layout with `boundaries`).
Poly zeta_moment(int k, int boundaries);

// Kontsevich volume polynomial in Lsq_1..Lsq_n.
Poly vk(int g, int n);
// Masur-Veech polynomial from the twisted recursion, in Lsq, PiSq, SInv.
Poly mv_poly_recursion(int g, int n);
// Converts SInv^(2k) into Tsq^k / (2k)!.
Poly laplace_invert(const Poly& mv, int n);

struct TwistedResult {
  Poly mv;  // Lsq, PiSq, SInv
  Poly vn;  // Lsq, PiSq, Tsq
};
TwistedResult twisted_vn(int g, int n);

// Lattice count from the discrete recursion; 0 when the perimeters have odd sum.
Rational discrete_n(int g, const std::vector<long>& L);

void clear_recursion_caches();

}  // namespace ribbonrec
