#pragma once

#include "ribbonrec/rational.hpp"

#include <array>
#include <cmath>

namespace ribbonrec {

struct FNPoint04 {
  std::array<Rational, 4> L;
  Rational ell, tau;
};

struct FNPoint11 {
  Rational L, ell, tau;
};

struct FlipResult {
  Rational ell_p, tau_p;
  bool degenerate = false;  // ell' = 0: twist outside the admissible image
};

Rational m_pair(const Rational& Li, const Rational& Lj, const Rational& ell);
Rational ell_prime_04(const FNPoint04& p);
Rational ell_prime_11(const FNPoint11& p);
FlipResult comb_flip_04(const FNPoint04& p);
FlipResult comb_flip_11(const FNPoint11& p);

// Twist from the lengths of the three curves (l, l', l'').
Rational recover_twist_04(const std::array<Rational, 4>& L, const Rational& ell, const Rational& ellp,
                          const Rational& ellpp);
Rational recover_twist_11(const Rational& L, const Rational& ell, const Rational& ellp, const Rational& ellpp);
// Which of the three cases of the four-holed sphere recovery applies (0, 1 or 2).
int twist_case_04(const std::array<Rational, 4>& L, const Rational& ell, const Rational& ellp,
                  const Rational& ellpp);

struct HypFlip {
  double ell_p = 0, tau_p = 0;  // already divided by beta
  // log |x / beta - reference| computed at full precision; NaN without a reference.
  double log_ell_gap = NAN, log_tau_gap = NAN;
};

// Which perimeter argument enters the normalising factors of the four-holed
// sphere twist: the old curve length or the new one.
enum class TwistNormalization { OldLength, NewLength };

// All inputs are multiplied by beta before the cosh/sinh formulas are applied;
// evaluation uses MPFR with precision growing linearly in beta.
// Throws std::domain_error on NaN, overflow or arcosh arguments below 1.
HypFlip hyp_flip_04(const std::array<double, 4>& L, double ell, double tau, double beta,
                    TwistNormalization norm = TwistNormalization::NewLength,
                    const FlipResult* reference = nullptr);
HypFlip hyp_flip_11(double L, double ell, double tau, double beta, const FlipResult* reference = nullptr);

}  // namespace ribbonrec
