#include "ribbonrec/zeta.hpp"

#include <mutex>
#include <stdexcept>

namespace ribbonrec {

Rational bernoulli(unsigned m) {
  static std::mutex lock;
  static std::vector<Rational> cache{Rational(1)};
  std::lock_guard<std::mutex> guard(lock);
  while (cache.size() <= m) {
    unsigned k = static_cast<unsigned>(cache.size());
    Rational s = 0;
    for (unsigned j = 0; j < k; ++j) s += Rational(binomial(k + 1, j)) * cache[j];
    cache.push_back(-s / Rational(k + 1));
  }
  return cache[m];
}

Rational zeta_even_coeff(unsigned k) {
  if (k == 0) throw std::invalid_argument("zeta_even requires k >= 1");
  Rational b = bernoulli(2 * k);
  Integer two_pow;
  mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, 2 * k);
  Rational r = b * Rational(two_pow) / Rational(2 * factorial(2 * k));
  if (k % 2 == 0) r = -r;
  return r;
}

Poly zeta_even(int k, int boundaries) {
  if (k <= 0) throw std::invalid_argument("zeta_even requires k >= 1");
  VarLayout lay{boundaries};
  Exponent e(lay.arity(), 0);
  e[lay.pisq()] = k;
  return Poly::monomial(e, zeta_even_coeff(static_cast<unsigned>(k)));
}

}  // namespace ribbonrec
