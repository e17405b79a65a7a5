#include "ribbonrec/flip.hpp"

#include <algorithm>
#include <cmath>
#include <initializer_list>
#include <mpfr.h>
#include <stdexcept>

namespace ribbonrec {

Rational m_pair(const Rational& Li, const Rational& Lj, const Rational& ell) {
  return std::max({Rational(0), Rational(Li - ell), Rational(Lj - ell), Rational((Li + Lj - ell) / 2)});
}

namespace {

Rational q_04(const std::array<Rational, 4>& L, const Rational& ell) {
  return std::max(Rational(L[0] + L[2] - ell), Rational(L[1] + L[3] - ell));
}

Rational m_sum(const std::array<Rational, 4>& L, const Rational& ell) {
  return m_pair(L[0], L[3], ell) + m_pair(L[1], L[2], ell);
}

Rational with_sign(const Rational& magnitude, int s) { return s < 0 ? Rational(-magnitude) : s > 0 ? magnitude : Rational(0); }

}  // namespace

Rational ell_prime_04(const FNPoint04& p) {
  return std::max(q_04(p.L, p.ell), Rational(2 * abs_value(p.tau) + m_sum(p.L, p.ell)));
}

Rational ell_prime_11(const FNPoint11& p) { return abs_value(p.tau) + positive_part((p.L - 2 * p.ell) / 2); }

FlipResult comb_flip_04(const FNPoint04& p) {
  FlipResult r;
  r.ell_p = ell_prime_04(p);
  Rational inner = 2 * abs_value(p.tau) + p.ell + m_sum(p.L, p.ell) - r.ell_p - m_pair(p.L[0], p.L[1], r.ell_p) -
                   m_pair(p.L[2], p.L[3], r.ell_p);
  r.tau_p = with_sign(abs_value(inner) / 2, -sgn(p.tau));
  r.degenerate = r.ell_p <= 0;
  return r;
}

FlipResult comb_flip_11(const FNPoint11& p) {
  FlipResult r;
  r.ell_p = ell_prime_11(p);
  r.tau_p = with_sign(abs_value(p.ell - positive_part(p.L / 2 - r.ell_p)), -sgn(p.tau));
  r.degenerate = r.ell_p <= 0;
  return r;
}

int twist_case_04(const std::array<Rational, 4>& L, const Rational& ell, const Rational& ellp,
                  const Rational& ellpp) {
  Rational q = q_04(L, ell);
  if (ellp == q) return 0;
  if (ellpp == q) return 1;
  return 2;
}

Rational recover_twist_04(const std::array<Rational, 4>& L, const Rational& ell, const Rational& ellp,
                          const Rational& ellpp) {
  Rational M = m_sum(L, ell);
  switch (twist_case_04(L, ell, ellp, ellpp)) {
    case 0:
      return (ellpp - M) / 2 - ell;
    case 1:
      return -(ellp - M) / 2;
    default: {
      Rational a = (ellpp - M) / 2, b = (ellp - M) / 2;
      return (a * a - b * b) / (2 * ell) - ell / 2;
    }
  }
}

Rational recover_twist_11(const Rational& L, const Rational& ell, const Rational& ellp, const Rational& ellpp) {
  Rational c = positive_part((L - 2 * ell) / 2);
  Rational a = ellpp - c, b = ellp - c;
  return (a * a - b * b) / (2 * ell) - ell / 2;
}

namespace {

// Minimal RAII wrapper over an MPFR value; every operand shares one precision.
class Big {
 public:
  explicit Big(mpfr_prec_t prec) { mpfr_init2(v_, prec); }
  Big(mpfr_prec_t prec, double x) : Big(prec) { mpfr_set_d(v_, x, MPFR_RNDN); }
  Big(const Big& o) : Big(mpfr_get_prec(o.v_)) { mpfr_set(v_, o.v_, MPFR_RNDN); }
  Big& operator=(const Big& o) {
    mpfr_set(v_, o.v_, MPFR_RNDN);
    return *this;
  }
  ~Big() { mpfr_clear(v_); }

  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }
  mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

 private:
  mpfr_t v_;
};

using Op1 = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t);
using Op2 = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t);

Big apply1(Op1 f, const Big& a) {
  Big r(a.prec());
  f(r.get(), a.get(), MPFR_RNDN);
  return r;
}

Big apply2(Op2 f, const Big& a, const Big& b) {
  Big r(a.prec());
  f(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}

Big operator+(const Big& a, const Big& b) { return apply2(mpfr_add, a, b); }
Big operator-(const Big& a, const Big& b) { return apply2(mpfr_sub, a, b); }
Big operator*(const Big& a, const Big& b) { return apply2(mpfr_mul, a, b); }
Big operator/(const Big& a, const Big& b) { return apply2(mpfr_div, a, b); }
Big half(const Big& a) {
  Big r(a.prec());
  mpfr_div_2ui(r.get(), a.get(), 1, MPFR_RNDN);
  return r;
}
Big ch(const Big& a) { return apply1(mpfr_cosh, a); }
Big sh(const Big& a) { return apply1(mpfr_sinh, a); }
Big root(const Big& a) {
  if (mpfr_sgn(a.get()) < 0) throw std::domain_error("square root of a negative quantity");
  return apply1(mpfr_sqrt, a);
}

// arcosh with a domain check; values a hair below 1 from rounding clamp to 0.
Big arcosh(const Big& a) {
  Big one(a.prec(), 1.0);
  if (mpfr_cmp(a.get(), one.get()) < 0) {
    Big gap = one - a;
    if (mpfr_get_exp(gap.get()) > -static_cast<mpfr_exp_t>(a.prec()) / 2)
      throw std::domain_error("arcosh argument below 1");
    return Big(a.prec(), 0.0);
  }
  return apply1(mpfr_acosh, a);
}

// The formulas subtract quantities of size e^{beta * scale}; carry enough bits
// to keep the difference exact to double precision.
mpfr_prec_t precision_for(double beta, double scale) {
  double bits = 128 + 4 * beta * scale / std::log(2.0);
  if (!(bits < 1e8)) throw std::domain_error("beta too large for the hyperbolic flip");
  return static_cast<mpfr_prec_t>(bits);
}

// C_{i,j}(x) from the half-cosh values.
Big c_pair(const Big& ci, const Big& cj, const Big& cx) {
  Big one(ci.prec(), 1.0), two(ci.prec(), 2.0);
  return cx * cx + ci * ci + cj * cj + two * ci * cj * cx - one;
}

double finite(double v) {
  if (!std::isfinite(v)) throw std::domain_error("non-finite hyperbolic result");
  return v;
}

// log |x - ref| without leaving MPFR; -inf on exact agreement.
double log_gap(const Big& x, const Rational& ref) {
  Big r(x.prec());
  mpfr_set_q(r.get(), ref.get_mpq_t(), MPFR_RNDN);
  Big d = apply1(mpfr_abs, x - r);
  if (mpfr_zero_p(d.get())) return -INFINITY;
  return apply1(mpfr_log, d).to_double();
}

HypFlip finish(const Big& ellp, const Big& mag, const Big& b, double tau_in, const FlipResult* ref) {
  Big e = ellp / b, t = mag / b;
  if (tau_in >= 0) t = apply1(mpfr_neg, t);
  HypFlip r;
  r.ell_p = finite(e.to_double());
  r.tau_p = finite(t.to_double());
  if (ref) {
    r.log_ell_gap = log_gap(e, ref->ell_p);
    r.log_tau_gap = log_gap(t, ref->tau_p);
  }
  return r;
}

void check_inputs(std::initializer_list<double> lengths, double tau, double beta) {
  if (!(beta >= 1)) throw std::domain_error("beta must be at least 1");
  if (!std::isfinite(tau)) throw std::domain_error("non-finite twist");
  for (double x : lengths)
    if (!(x > 0) || !std::isfinite(x)) throw std::domain_error("lengths must be positive");
}

}  // namespace

HypFlip hyp_flip_04(const std::array<double, 4>& Lin, double ell_in, double tau_in, double beta,
                    TwistNormalization norm, const FlipResult* reference) {
  check_inputs({Lin[0], Lin[1], Lin[2], Lin[3], ell_in}, tau_in, beta);
  double scale = Lin[0] + Lin[1] + Lin[2] + Lin[3] + ell_in + std::fabs(tau_in);
  const mpfr_prec_t P = precision_for(beta, scale);
  Big b(P, beta), one(P, 1.0);
  std::array<Big, 4> c{Big(P), Big(P), Big(P), Big(P)};
  for (int i = 0; i < 4; ++i) c[i] = ch(half(Big(P, Lin[i]) * b));
  Big ell = Big(P, ell_in) * b, tau = Big(P, tau_in) * b;
  Big cl = ch(half(ell)), sl = sh(half(ell));
  Big cross = c[0] * c[2] + c[1] * c[3];
  Big chp = (c[0] * c[1] + c[2] * c[3] + cl * cross + ch(tau) * root(c_pair(c[0], c[3], cl) * c_pair(c[1], c[2], cl))) /
            (sl * sl);
  Big ellp = arcosh(chp);
  ellp = ellp + ellp;
  Big cx = norm == TwistNormalization::NewLength ? chp : cl;
  Big bracket = (chp * chp - one) * cl - c[0] * c[3] - c[1] * c[2] - chp * cross;
  Big mag = arcosh(bracket / root(c_pair(c[0], c[1], cx) * c_pair(c[2], c[3], cx)));
  return finish(ellp, mag, b, tau_in, reference);
}

HypFlip hyp_flip_11(double L_in, double ell_in, double tau_in, double beta, const FlipResult* reference) {
  check_inputs({L_in, ell_in}, tau_in, beta);
  double scale = L_in + ell_in + std::fabs(tau_in);
  const mpfr_prec_t P = precision_for(beta, scale);
  Big b(P, beta), one(P, 1.0), two(P, 2.0);
  Big L = Big(P, L_in) * b, ell = Big(P, ell_in) * b, tau = Big(P, tau_in) * b;
  Big ct = ch(half(tau)), sl = sh(half(ell)), cL = ch(half(L));
  Big sum = cL + ch(ell);
  Big ellp = arcosh(ct / sl * root(sum / two));
  ellp = ellp + ellp;
  Big top = ct * ct * sum - two * sl * sl;
  Big bottom = ct * ct * sum + sl * sl * (cL - one);
  Big mag = arcosh(ch(half(ell)) * root(top / bottom));
  mag = mag + mag;
  return finish(ellp, mag, b, tau_in, reference);
}

}  // namespace ribbonrec
