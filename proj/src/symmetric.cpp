#include "ribbonrec/symmetric.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace ribbonrec {

bool SymTerm::operator==(const SymTerm& o) const {
  return partition == o.partition && pisq == o.pisq && tsq == o.tsq && sinv == o.sinv &&
         coeff == o.coeff;
}

Poly expand_symmetric(const Partition& lambda, int boundaries) {
  VarLayout lay{boundaries};
  if (static_cast<int>(lambda.size()) > boundaries)
    throw std::invalid_argument("partition longer than variable count");
  std::vector<int> v(lambda.begin(), lambda.end());
  v.resize(static_cast<std::size_t>(boundaries), 0);
  std::sort(v.begin(), v.end());
  Poly p(lay.arity());
  do {
    Exponent e(lay.arity(), 0);
    std::copy(v.begin(), v.end(), e.begin());
    p.add_term(e, 1);
  } while (std::next_permutation(v.begin(), v.end()));
  return p;
}

namespace {

bool term_order(const SymTerm& a, const SymTerm& b) {
  if (a.pisq != b.pisq) return a.pisq < b.pisq;
  if (a.tsq != b.tsq) return a.tsq < b.tsq;
  if (a.sinv != b.sinv) return a.sinv < b.sinv;
  return a.partition > b.partition;
}

}  // namespace

std::vector<SymTerm> render_symmetric(const Poly& p, int boundaries) {
  VarLayout lay{boundaries};
  if (p.arity() != lay.arity()) throw std::invalid_argument("arity mismatch in render_symmetric");
  Poly rest = p;
  std::vector<SymTerm> out;
  while (!rest.is_zero()) {
    const Exponent& e = rest.terms().rbegin()->first;
    Partition lambda(e.begin(), e.begin() + boundaries);
    std::sort(lambda.begin(), lambda.end(), std::greater<int>());
    while (!lambda.empty() && lambda.back() == 0) lambda.pop_back();
    Exponent lead(lay.arity(), 0);
    std::copy(lambda.begin(), lambda.end(), lead.begin());
    lead[lay.pisq()] = e[lay.pisq()];
    lead[lay.tsq()] = e[lay.tsq()];
    lead[lay.sinv()] = e[lay.sinv()];
    Rational c = rest.coeff(lead);
    if (c == 0) throw std::invalid_argument("polynomial is not symmetric");
    SymTerm t{lambda, e[lay.pisq()], e[lay.tsq()], e[lay.sinv()], c};
    Poly orbit = expand_symmetric(lambda, boundaries);
    Exponent extra(lay.arity(), 0);
    extra[lay.pisq()] = t.pisq;
    extra[lay.tsq()] = t.tsq;
    extra[lay.sinv()] = t.sinv;
    for (const auto& [oe, oc] : orbit.terms()) {
      Exponent f = oe;
      for (std::size_t i = lay.pisq(); i < lay.arity(); ++i) f[i] = extra[i];
      if (rest.coeff(f) != c) throw std::invalid_argument("polynomial is not symmetric");
      rest.add_term(f, -c);
    }
    out.push_back(t);
  }
  std::sort(out.begin(), out.end(), term_order);
  return out;
}

Poly expand_terms(const std::vector<SymTerm>& terms, int boundaries) {
  VarLayout lay{boundaries};
  Poly p(lay.arity());
  for (const auto& t : terms) {
    Exponent extra(lay.arity(), 0);
    extra[lay.pisq()] = t.pisq;
    extra[lay.tsq()] = t.tsq;
    extra[lay.sinv()] = t.sinv;
    p += expand_symmetric(t.partition, boundaries) * Poly::monomial(extra, t.coeff);
  }
  return p;
}

namespace {

std::string power(const std::string& base, int k) {
  if (k == 1) return base;
  if (k < 10) return base + "^" + std::to_string(k);
  return base + "^{" + std::to_string(k) + "}";
}

std::string partition_label(const Partition& lambda) {
  std::ostringstream os;
  os << "m_{(";
  for (std::size_t i = 0; i < lambda.size(); ++i) os << (i ? "," : "") << lambda[i];
  os << ")}";
  return os.str();
}

}  // namespace

std::string to_latex(const std::vector<SymTerm>& terms) {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms) {
    Rational c = t.coeff;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    c = abs_value(c);
    std::vector<std::string> factors;
    if (t.pisq) factors.push_back(power("\\pi", 2 * t.pisq));
    if (t.tsq) factors.push_back(power("t", 2 * t.tsq));
    if (t.sinv) factors.push_back(power("s", -2 * t.sinv));
    std::string sym = factors.empty() ? "" : factors[0];
    for (std::size_t i = 1; i < factors.size(); ++i) sym += " " + factors[i];
    Integer num = c.get_num(), den = c.get_den();
    std::string numer;
    if (num != 1 || sym.empty()) numer = num.get_str();
    if (!sym.empty()) numer += (numer.empty() ? "" : " ") + sym;
    if (den == 1)
      os << numer;
    else
      os << "\\tfrac{" << numer << "}{" << den.get_str() << "}";
    if (!t.partition.empty()) os << " " << partition_label(t.partition);
  }
  return os.str();
}

std::string to_plain(const std::vector<SymTerm>& terms) {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms) {
    if (!first) os << " + ";
    first = false;
    os << t.coeff.get_str();
    if (t.pisq) os << "*pi^" << 2 * t.pisq;
    if (t.tsq) os << "*t^" << 2 * t.tsq;
    if (t.sinv) os << "*s^-" << 2 * t.sinv;
    if (!t.partition.empty()) {
      os << "*m(";
      for (std::size_t i = 0; i < t.partition.size(); ++i) os << (i ? "," : "") << t.partition[i];
      os << ")";
    }
  }
  return os.str();
}

}  // namespace ribbonrec
