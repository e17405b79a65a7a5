#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace ribbonrec {

using Rational = mpq_class;
using Integer = mpz_class;

// Reduced p/q; throws on q = 0.
Rational make_rational(const Integer& p, const Integer& q);
// Parses "p", "p/q" or a finite decimal such as "0.25".
Rational parse_rational(const std::string& text);
std::vector<Rational> parse_rational_list(const std::string& text);
std::string to_string(const Rational& q);

inline Rational positive_part(const Rational& x) { return x > 0 ? x : Rational(0); }
inline Rational abs_value(const Rational& x) { return x < 0 ? Rational(-x) : x; }
inline int sign_of(const Rational& x) { return sgn(x); }

Integer factorial(unsigned k);
Integer binomial(unsigned n, unsigned k);

}  // namespace ribbonrec
