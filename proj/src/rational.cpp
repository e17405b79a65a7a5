#include "ribbonrec/rational.hpp"

#include <sstream>
#include <stdexcept>

namespace ribbonrec {

Rational make_rational(const Integer& p, const Integer& q) {
  if (q == 0) throw std::invalid_argument("zero denominator");
  Rational r(p, q);
  r.canonicalize();
  return r;
}

Rational parse_rational(const std::string& raw) {
  std::string text;
  for (char c : raw)
    if (c != ' ') text.push_back(c);
  if (text.empty()) throw std::invalid_argument("empty rational");
  auto dot = text.find('.');
  if (dot != std::string::npos) {
    if (text.find('/') != std::string::npos || text.find_first_of("eE") != std::string::npos)
      throw std::invalid_argument("malformed rational: " + raw);
    std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    std::size_t scale = text.size() - dot - 1;
    Integer num;
    if (num.set_str(digits, 10) != 0) throw std::invalid_argument("malformed rational: " + raw);
    Integer den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, scale);
    Rational q(num, den);
    q.canonicalize();
    return q;
  }
  Rational q;
  if (q.set_str(text, 10) != 0) throw std::invalid_argument("malformed rational: " + raw);
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + raw);
  q.canonicalize();
  return q;
}

std::vector<Rational> parse_rational_list(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_rational(item));
  return out;
}

std::string to_string(const Rational& q) { return q.get_str(); }

Integer factorial(unsigned k) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), k);
  return r;
}

Integer binomial(unsigned n, unsigned k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

}  // namespace ribbonrec
