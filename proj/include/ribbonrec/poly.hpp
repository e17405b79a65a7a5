#pragma once

#include "ribbonrec/rational.hpp"

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace ribbonrec {

using Exponent = std::vector<int>;

// Graded lexicographic order: total degree first, then lexicographic.
struct GrlexLess {
  bool operator()(const Exponent& a, const Exponent& b) const;
};

// Sparse multivariate polynomial with rational coefficients in canonical form.
class Poly {
 public:
  using Terms = std::map<Exponent, Rational, GrlexLess>;

  explicit Poly(std::size_t arity = 0) : arity_(arity) {}

  static Poly constant(std::size_t arity, const Rational& c);
  static Poly monomial(const Exponent& e, const Rational& c);
  static Poly variable(std::size_t arity, std::size_t index, int power = 1);

  std::size_t arity() const { return arity_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  void add_term(const Exponent& e, const Rational& c);
  Rational coeff(const Exponent& e) const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Rational& c);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
  bool operator==(const Poly& o) const;
  bool operator!=(const Poly& o) const { return !(*this == o); }

  int degree_in(std::size_t var) const;
  // Moves variable i to position map[i] in a polynomial of the given arity.
  Poly remap(std::size_t new_arity, const std::vector<std::size_t>& map) const;
  // Coefficient of var^power as a polynomial of the same arity.
  Poly coefficient_of(std::size_t var, int power) const;
  // Substitutes a constant for one variable.
  Poly specialize(std::size_t var, const Rational& value) const;
  Rational evaluate(const std::vector<Rational>& point) const;
  double evaluate_double(const std::vector<double>& point) const;

  std::string debug_string(const std::vector<std::string>& names) const;

 private:
  void check_arity(const Poly& o) const;
  std::size_t arity_;
  Terms terms_;
};

Poly add(const Poly& a, const Poly& b);
Poly mul(const Poly& a, const Poly& b);
Poly scale(const Poly& a, const Rational& c);

// Standard variable layout: Lsq_1..Lsq_n, PiSq, Tsq, SInv.
struct VarLayout {
  int boundaries = 0;
  std::size_t arity() const { return static_cast<std::size_t>(boundaries) + 3; }
  std::size_t lsq(int i) const { return static_cast<std::size_t>(i); }
  std::size_t pisq() const { return static_cast<std::size_t>(boundaries); }
  std::size_t tsq() const { return static_cast<std::size_t>(boundaries) + 1; }
  std::size_t sinv() const { return static_cast<std::size_t>(boundaries) + 2; }
  std::vector<std::string> names() const;
};

}  // namespace ribbonrec
