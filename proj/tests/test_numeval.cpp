#include "doctest.h"

#include <boost/math/special_functions/bessel.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <boost/math/special_functions/zeta.hpp>
#include <cmath>
#include <numbers>
#include <random>

#include "ew/errors.hpp"
#include "ew/numeval.hpp"

using namespace ew;
using doctest::Approx;

namespace {

constexpr double kPi = std::numbers::pi;

double rel(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

// Completed zeta from Boost, no reflection tricks.
double xi_oracle(double x) {
  return std::pow(kPi, -0.5 * x) * boost::math::tgamma(0.5 * x) * boost::math::zeta(x);
}

bool away_from_trivial(double x) {
  // xi is finite at -2k but both Gamma and zeta are singular/zero there.
  for (int k = 0; k <= 20; ++k)
    if (std::abs(x + 2.0 * k) < 0.05) return false;
  return std::abs(x - 1.0) > 0.05;
}

}  // namespace

TEST_CASE("zeta against an independent implementation") {
  for (double x : {-7.3, -3.5, -0.5, 0.25, 0.5, 0.75, 1.5, 2.0, 3.0, 4.5, 10.0, 25.0, 59.0, 61.0, 90.0}) {
    CAPTURE(x);
    CHECK(rel(zeta_num(x), boost::math::zeta(x)) < 1e-11);
  }
  CHECK(zeta_num(2.0) == Approx(kPi * kPi / 6).epsilon(1e-14));
  CHECK(zeta_num(0.0) == Approx(-0.5).epsilon(1e-14));
  CHECK_THROWS_AS(zeta_num(1.0), PoleError);
}

TEST_CASE("xi against an independent implementation") {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> u(-12.0, 14.0);
  int done = 0;
  while (done < 50) {
    double x = u(rng);
    if (!away_from_trivial(x) || !away_from_trivial(1.0 - x)) continue;
    CAPTURE(x);
    CHECK(rel(xi_num(x), xi_oracle(x)) < 1e-10);
    ++done;
  }
  CHECK_THROWS_AS(xi_num(0.0), PoleError);
  CHECK_THROWS_AS(xi_num(1.0), PoleError);
  CHECK(xi_num(1e-6) < 0.0);
  CHECK(xi_num(1.0 + 1e-6) > 0.0);
}

TEST_CASE("xi functional equation on random points") {
  // Left side from the raw definition with zeta_num (reflection inside zeta),
  // right side through xi_num.
  std::mt19937 rng(2024);
  std::uniform_real_distribution<double> u(-9.0, 10.0);
  int done = 0;
  while (done < 20) {
    double x = u(rng);
    if (!away_from_trivial(x) || !away_from_trivial(1.0 - x)) continue;
    CAPTURE(x);
    const double lhs = std::exp(-0.5 * x * std::log(kPi)) * std::tgamma(0.5 * x) * zeta_num(x);
    CHECK(rel(lhs, xi_num(1.0 - x)) < 1e-10);
    ++done;
  }
}

TEST_CASE("Bessel K at half order has a closed form") {
  for (double x : {0.1, 0.5, 1.0, 2.0, 2 * kPi, 10.0, 50.0, 200.0}) {
    CAPTURE(x);
    const double exact = std::sqrt(kPi / (2 * x)) * std::exp(-x);
    CHECK(rel(bessel_k(0.5, x), exact) < 1e-10);
    CHECK(rel(bessel_k(-0.5, x), exact) < 1e-10);
  }
  // K_{3/2}(x) = sqrt(pi/2x) e^{-x} (1 + 1/x)
  CHECK(rel(bessel_k(1.5, 3.0), std::sqrt(kPi / 6) * std::exp(-3.0) * (1 + 1 / 3.0)) < 1e-10);
}

TEST_CASE("Bessel K against an independent implementation") {
  for (double nu : {0.0, 0.3, 1.0, 2.5, 4.5, 8.0, 12.5})
    for (double x : {0.5, 1.0, 2 * kPi, 4 * kPi, 20.0, 60.0}) {
      CAPTURE(nu);
      CAPTURE(x);
      CHECK(rel(bessel_k(nu, x), boost::math::cyl_bessel_k(nu, x)) < 1e-10);
    }
  // far beyond double range the log stays accurate
  CHECK(log_bessel_k(2.0, 2000.0) == Approx(std::log(boost::math::cyl_bessel_k(2.0, 600.0)) - 1400.0).epsilon(1e-3));
  CHECK_THROWS_AS(bessel_k(1.0, 0.0), ValidationError);
}

TEST_CASE("divisor sums") {
  for (std::int64_t m = 1; m <= 60; ++m)
    for (double t : {-3.0, -0.5, 0.0, 1.0, 2.0}) {
      double brute = 0.0;
      for (std::int64_t d = 1; d <= m; ++d)
        if (m % d == 0) brute += std::pow(static_cast<double>(d), t);
      CHECK(rel(divisor_sigma(t, m), brute) < 1e-13);
    }
  CHECK_THROWS_AS(divisor_sigma(1.0, 0), ValidationError);
}

TEST_CASE("completed building block is symmetric under s -> 1-s") {
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> u(-4.0, 5.0);
  for (int k = 0; k < 30; ++k) {
    double s = u(rng);
    if (!away_from_trivial(2 * s) || !away_from_trivial(2 - 2 * s)) continue;
    for (std::int64_t m : {1, -2, 6, 12}) {
      CAPTURE(s);
      CAPTURE(m);
      const double a = xi_num(2 * s) * b_coefficient(s, m);
      const double b = xi_num(2 - 2 * s) * b_coefficient(1 - s, m);
      CHECK(rel(a, b) < 1e-9);
    }
  }
  CHECK(b_coefficient(0.5, 3) == 0.0);
  CHECK(b_coefficient(0.0, 3) == 0.0);
  CHECK_THROWS_AS(b_coefficient(1.3, 0), ValidationError);
}

TEST_CASE("canonicalization preserves numeric value of random xi products") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> slope(-4, 4), num(-24, 24), expo(-3, 3), nfac(1, 5);
  std::uniform_real_distribution<double> sdist(0.3, 7.7);
  int done = 0;
  while (done < 100) {
    XiProduct p;
    for (int k = nfac(rng); k > 0; --k) {
      int e = expo(rng);
      if (e == 0) e = 1;
      p.multiply(AffineArg{Rational(slope(rng)), Rational(num(rng), 2)}, e);
    }
    const double s = sdist(rng);
    bool ok = true;
    double raw = 1.0;
    for (const auto& [arg, e] : p.factors()) {
      const double x = arg.at(s);
      if (!away_from_trivial(x) || !away_from_trivial(1.0 - x)) ok = false;
      else raw *= std::pow(xi_oracle(x), e);
    }
    if (!ok) continue;
    CAPTURE(s);
    CHECK(rel(eval_xi_product(canonicalize(p), s), raw) < 1e-9);
    ++done;
  }
}

TEST_CASE("term evaluation and special points") {
  ChargeMap q{{"m", 2}, {"n", 3}};
  // orientation of a block leaves its value unchanged
  auto b = parse_term("B[1:m](s)");
  auto flipped = canonicalize(b);
  for (double s : {0.3, 1.7, 2.6, 4.1}) CHECK(rel(eval_term(flipped, s, q), eval_term(b, s, q)) < 1e-9);
  // removable: xi(2s-1)/xi(2s-2) -> -1 at s = 1
  CHECK(eval_term(parse_term("xi(2s-1)/xi(2s-2)"), 1.0, q) == Approx(-1.0).epsilon(1e-6));
  // forced zero and genuine pole
  CHECK(eval_term(parse_term("xi(2s-1)/xi(2s) * B[1:m](1-s)"), 0.5, q) == 0.0);
  CHECK_THROWS_AS(eval_term(parse_term("xi(2s)"), 0.5, q), PoleError);
  CHECK_THROWS_AS(eval_term(parse_term("B[7:m,8:n](6-s,19/2-s)"), 2.3, q), OutOfScope);
  CHECK_THROWS_AS(eval_term(parse_term("B[1:p](s)"), 2.3, q), ValidationError);
  // integer slot names bind themselves
  CHECK(eval_term(parse_term("B[1:5](s)"), 2.3, {}) == Approx(b_coefficient(2.3, 5)).epsilon(1e-14));
  // a sum is the sum of its terms
  auto c = parse_coeff("xi(2s-1)/xi(2s) * B[1:m](s-1/2) * B[3:n](s-1/2) + B[1:m](s)");
  const double s = 3.2;
  CHECK(eval_coeff(c, s, q) ==
        Approx(eval_term(c.terms[0], s, q) + eval_term(c.terms[1], s, q)).epsilon(1e-14));
  NumericConfig bad;
  bad.target_rel_error = 0.5;
  CHECK_THROWS_AS(bad.validate(), ValidationError);
}
