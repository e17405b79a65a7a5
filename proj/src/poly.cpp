#include "ribbonrec/poly.hpp"

#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace ribbonrec {

bool GrlexLess::operator()(const Exponent& a, const Exponent& b) const {
  int da = std::accumulate(a.begin(), a.end(), 0);
  int db = std::accumulate(b.begin(), b.end(), 0);
  if (da != db) return da < db;
  return a < b;
}

Poly Poly::constant(std::size_t arity, const Rational& c) {
  Poly p(arity);
  p.add_term(Exponent(arity, 0), c);
  return p;
}

Poly Poly::monomial(const Exponent& e, const Rational& c) {
  Poly p(e.size());
  p.add_term(e, c);
  return p;
}

Poly Poly::variable(std::size_t arity, std::size_t index, int power) {
  if (index >= arity) throw std::invalid_argument("variable index out of range");
  Exponent e(arity, 0);
  e[index] = power;
  return monomial(e, 1);
}

void Poly::add_term(const Exponent& e, const Rational& c) {
  if (e.size() != arity_) throw std::invalid_argument("exponent arity mismatch");
  if (c == 0) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
    return;
  }
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

Rational Poly::coeff(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Poly::check_arity(const Poly& o) const {
  if (o.arity_ != arity_) throw std::invalid_argument("polynomial arity mismatch");
}

Poly& Poly::operator+=(const Poly& o) {
  check_arity(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  check_arity(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Poly& Poly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  a.check_arity(b);
  Poly r(a.arity_);
  Exponent e(a.arity_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  return r;
}

bool Poly::operator==(const Poly& o) const { return arity_ == o.arity_ && terms_ == o.terms_; }

int Poly::degree_in(std::size_t var) const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
  return d;
}

Poly Poly::remap(std::size_t new_arity, const std::vector<std::size_t>& map) const {
  if (map.size() != arity_) throw std::invalid_argument("remap size mismatch");
  Poly r(new_arity);
  Exponent e(new_arity);
  for (const auto& [old, c] : terms_) {
    std::fill(e.begin(), e.end(), 0);
    for (std::size_t i = 0; i < arity_; ++i) {
      if (old[i] == 0) continue;
      if (map[i] >= new_arity) throw std::invalid_argument("remap target out of range");
      e[map[i]] += old[i];
    }
    r.add_term(e, c);
  }
  return r;
}

Poly Poly::coefficient_of(std::size_t var, int power) const {
  Poly r(arity_);
  for (const auto& [e, c] : terms_) {
    if (e[var] != power) continue;
    Exponent f = e;
    f[var] = 0;
    r.add_term(f, c);
  }
  return r;
}

Poly Poly::specialize(std::size_t var, const Rational& value) const {
  Poly r(arity_);
  for (const auto& [e, c] : terms_) {
    Exponent f = e;
    Rational v;
    mpz_pow_ui(v.get_num_mpz_t(), value.get_num_mpz_t(), static_cast<unsigned long>(e[var]));
    mpz_pow_ui(v.get_den_mpz_t(), value.get_den_mpz_t(), static_cast<unsigned long>(e[var]));
    f[var] = 0;
    r.add_term(f, c * v);
  }
  return r;
}

Rational Poly::evaluate(const std::vector<Rational>& point) const {
  if (point.size() != arity_) throw std::invalid_argument("evaluation arity mismatch");
  Rational total = 0;
  for (const auto& [e, c] : terms_) {
    Rational m = c;
    for (std::size_t i = 0; i < arity_; ++i)
      for (int k = 0; k < e[i]; ++k) m *= point[i];
    total += m;
  }
  return total;
}

double Poly::evaluate_double(const std::vector<double>& point) const {
  if (point.size() != arity_) throw std::invalid_argument("evaluation arity mismatch");
  double total = 0;
  for (const auto& [e, c] : terms_) {
    double m = c.get_d();
    for (std::size_t i = 0; i < arity_; ++i) m *= std::pow(point[i], e[i]);
    total += m;
  }
  return total;
}

std::string Poly::debug_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << c.get_str();
    for (std::size_t i = 0; i < arity_; ++i) {
      if (e[i] == 0) continue;
      os << "*" << (i < names.size() ? names[i] : "x" + std::to_string(i));
      if (e[i] > 1) os << "^" << e[i];
    }
  }
  return os.str();
}

Poly add(const Poly& a, const Poly& b) { return a + b; }
Poly mul(const Poly& a, const Poly& b) { return a * b; }
Poly scale(const Poly& a, const Rational& c) { return a * c; }

std::vector<std::string> VarLayout::names() const {
  std::vector<std::string> out;
  for (int i = 1; i <= boundaries; ++i) out.push_back("Lsq" + std::to_string(i));
  out.push_back("PiSq");
  out.push_back("Tsq");
  out.push_back("SInv");
  return out;
}

}  // namespace ribbonrec
