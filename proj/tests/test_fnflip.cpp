#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ribbonrec/flip.hpp"

#include <algorithm>
#include <cmath>
#include <random>

using namespace ribbonrec;

namespace {

Rational q(long a, long b = 1) { return make_rational(a, b); }

struct Sampler {
  std::mt19937_64 rng;
  std::uniform_int_distribution<int> len{1, 12}, twist{-30, 30};
  explicit Sampler(std::uint64_t seed) : rng(seed) {}
  // dyadic values are exact as doubles
  Rational length() { return q(len(rng), 4); }
  Rational tau() { return q(twist(rng), 4); }
  FNPoint04 p04() { return {{length(), length(), length(), length()}, length(), tau()}; }
  FNPoint11 p11() { return {q(len(rng), 2), length(), tau()}; }
};

int sgn(const Rational& x) { return (x > 0) - (x < 0); }

// Least-squares slope of log gap against log beta; exact agreement counts as a
// very small gap.
double slope(const std::vector<double>& logb, const std::vector<double>& loggap) {
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < logb.size(); ++i) {
    mx += logb[i];
    my += std::max(loggap[i], -1e6);
  }
  mx /= logb.size();
  my /= logb.size();
  double sxy = 0, sxx = 0;
  for (std::size_t i = 0; i < logb.size(); ++i) {
    sxy += (logb[i] - mx) * (std::max(loggap[i], -1e6) - my);
    sxx += (logb[i] - mx) * (logb[i] - mx);
  }
  return sxy / sxx;
}

}  // namespace

TEST_CASE("four-holed sphere examples") {
  FNPoint04 p{{1, 1, 1, 1}, 4, 1};
  CHECK(ell_prime_04(p) == 2);
  auto r = comb_flip_04(p);
  CHECK(r.ell_p == 2);
  CHECK(sgn(r.tau_p) <= 0);
  CHECK(m_pair(q(3), q(1), q(1)) == 2);
  CHECK(m_pair(q(1), q(1), q(5)) == 0);
  CHECK(m_pair(q(2), q(2), q(1)) == q(3, 2));
  FNPoint04 z{{1, 2, 3, 4}, 2, 0};
  CHECK(comb_flip_04(z).tau_p == 0);
}

TEST_CASE("one-holed torus examples") {
  auto r = comb_flip_11({2, 1, q(1, 2)});
  CHECK(r.ell_p == q(1, 2));
  CHECK(r.tau_p == q(-1, 2));
  CHECK_FALSE(r.degenerate);
  auto z = comb_flip_11({2, 1, 0});
  CHECK(z.ell_p == 0);
  CHECK(z.degenerate);
  CHECK(ell_prime_11({q(10), q(1), q(3)}) == 7);
}

TEST_CASE("flips are even in the twist length and odd in the new twist") {
  Sampler s(1);
  for (int it = 0; it < 500; ++it) {
    auto p = s.p04();
    auto a = comb_flip_04(p);
    p.tau = -p.tau;
    auto b = comb_flip_04(p);
    CHECK(a.ell_p == b.ell_p);
    CHECK(a.tau_p == -b.tau_p);
    if (p.tau != 0) CHECK(sgn(b.tau_p) * sgn(p.tau) <= 0);

    auto t = s.p11();
    auto c = comb_flip_11(t);
    t.tau = -t.tau;
    auto d = comb_flip_11(t);
    CHECK(c.ell_p == d.ell_p);
    CHECK(c.tau_p == -d.tau_p);
    CHECK(c.ell_p >= 0);
  }
}

TEST_CASE("twist recovery from three lengths") {
  Sampler s(3);
  int cases[3] = {0, 0, 0};
  for (int it = 0; it < 3000; ++it) {
    auto p = s.p04();
    Rational lp = ell_prime_04(p);
    // the Dehn-twisted curve: the new-length formula at tau + ell
    Rational lpp = ell_prime_04({p.L, p.ell, p.tau + p.ell});
    CHECK(recover_twist_04(p.L, p.ell, lp, lpp) == p.tau);
    ++cases[twist_case_04(p.L, p.ell, lp, lpp)];

    auto t = s.p11();
    Rational a = ell_prime_11(t), b = ell_prime_11({t.L, t.ell, t.tau + t.ell});
    CHECK(recover_twist_11(t.L, t.ell, a, b) == t.tau);
  }
  for (int c : cases) CHECK(c > 0);
}

TEST_CASE("Dehn twist family") {
  Sampler s(5);
  for (int it = 0; it < 300; ++it) {
    auto p = s.p04();
    for (int k = -2; k <= 2; ++k) {
      Rational lk = ell_prime_04({p.L, p.ell, p.tau + k * p.ell});
      Rational lk1 = ell_prime_04({p.L, p.ell, p.tau + (k + 1) * p.ell});
      CHECK(recover_twist_04(p.L, p.ell, lk, lk1) == p.tau + k * p.ell);
    }
  }
}

TEST_CASE("hyperbolic flips converge to the combinatorial ones") {
  auto c = comb_flip_11({2, 1, q(1, 2)});
  auto h = hyp_flip_11(2, 1, 0.5, std::ldexp(1.0, 10), &c);
  CHECK(std::abs(h.ell_p - 0.5) < 1e-2);
  CHECK(std::abs(h.tau_p + 0.5) < 1e-2);
  CHECK(std::isfinite(h.log_ell_gap));

  auto h0 = hyp_flip_11(2, 1, 0.5, 4.0);
  CHECK(std::isnan(h0.log_ell_gap));

  auto c4 = comb_flip_04({{1, 1, 1, 1}, 4, 1});
  auto h4 = hyp_flip_04({1, 1, 1, 1}, 4, 1, std::ldexp(1.0, 10), TwistNormalization::NewLength, &c4);
  CHECK(std::abs(h4.ell_p - c4.ell_p.get_d()) < 1e-2);
  CHECK(std::abs(h4.tau_p - c4.tau_p.get_d()) < 1e-2);
}

TEST_CASE("hyperbolic gaps shrink at least like 1/beta") {
  Sampler s(7);
  std::vector<double> logb;
  for (int k = 4; k <= 10; ++k) logb.push_back(k * std::log(2.0));
  for (int it = 0; it < 4; ++it) {
    auto p = s.p04();
    auto c = comb_flip_04(p);
    if (c.degenerate) continue;
    std::vector<double> ge, gt;
    for (int k = 4; k <= 10; ++k) {
      auto h = hyp_flip_04({p.L[0].get_d(), p.L[1].get_d(), p.L[2].get_d(), p.L[3].get_d()}, p.ell.get_d(),
                           p.tau.get_d(), std::ldexp(1.0, k), TwistNormalization::NewLength, &c);
      ge.push_back(h.log_ell_gap);
      gt.push_back(h.log_tau_gap);
    }
    CHECK(slope(logb, ge) <= -0.8);
    CHECK(slope(logb, gt) <= -0.8);
  }
  for (int it = 0; it < 4; ++it) {
    auto p = s.p11();
    auto c = comb_flip_11(p);
    if (c.degenerate) continue;
    std::vector<double> ge, gt;
    for (int k = 4; k <= 10; ++k) {
      auto h = hyp_flip_11(p.L.get_d(), p.ell.get_d(), p.tau.get_d(), std::ldexp(1.0, k), &c);
      ge.push_back(h.log_ell_gap);
      gt.push_back(h.log_tau_gap);
    }
    CHECK(slope(logb, ge) <= -0.8);
    CHECK(slope(logb, gt) <= -0.8);
  }
}

TEST_CASE("hyperbolic domain errors") {
  CHECK_THROWS_AS(hyp_flip_11(2, 1, 0.5, 0.5), std::domain_error);
  CHECK_THROWS_AS(hyp_flip_11(-2, 1, 0.5, 2), std::domain_error);
  CHECK_THROWS_AS(hyp_flip_11(2, NAN, 0.5, 2), std::domain_error);
  CHECK_THROWS_AS(hyp_flip_04({1, 1, 1, 0}, 1, 0, 2), std::domain_error);
  CHECK_NOTHROW(hyp_flip_04({1, 1, 1, 1}, 1, 0.25, 1));
}
