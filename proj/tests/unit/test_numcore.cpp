#include <cmath>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "ttw4d/jet.hpp"
#include "ttw4d/omega_poly.hpp"
#include "ttw4d/rational.hpp"

using namespace ttw4d;

TEST_CASE("rational parsing and canonical form") {
  CHECK(Rational::parse("3/6") == Rational(1, 2));
  CHECK(Rational::parse("-4/8").str() == "-1/2");
  CHECK(Rational::parse("7") == Rational(7));
  CHECK(Rational(2, -4) == Rational(-1, 2));
  CHECK_THROWS_AS(Rational::parse("1/"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("x"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("0.5"), std::invalid_argument);
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("rational field axioms on random samples") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 300; ++t) {
    const Rational a = oracle::random_rational(rng), b = oracle::random_rational(rng),
                   c = oracle::random_rational(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK(a - a == Rational(0));
    if (!a.is_zero()) CHECK(a * (Rational(1) / a) == Rational(1));
  }
}

TEST_CASE("pochhammer and falling factorial") {
  CHECK(pochhammer(Rational(7, 3), 0) == Rational(1));
  CHECK(pochhammer(Rational(1), 5) == Rational(120));
  CHECK(falling_factorial(Rational(6), 6) == Rational(720));
  CHECK(falling_factorial(Rational(3), 5) == Rational(0));
  CHECK(pochhammer(Rational(1, 2), 3) == Rational(15, 8));
  std::mt19937_64 rng(3);
  for (int t = 0; t < 50; ++t) {
    const Rational x = oracle::random_rational(rng);
    const unsigned m = static_cast<unsigned>(rng() % 6);
    CHECK(pochhammer(x, m) == oracle::rising(x, m));
    // (x)_m = (x+m-1)(x+m-2)... falling
    CHECK(pochhammer(x, m) == falling_factorial(x + Rational(long(m)) - Rational(1), m));
  }
}

TEST_CASE("omega polynomials") {
  const OmegaPoly w = OmegaPoly::omega();
  const OmegaPoly p = OmegaPoly(1) + w;
  CHECK(p * p == OmegaPoly(1) + w * Rational(2) + w * w);
  CHECK((p * p).degree() == 2);
  CHECK((p - p).is_zero());
  CHECK(p.eval(Rational(3)) == Rational(4));
  CHECK(((w * w) * Rational(-12)).str() == "-12*w^2");
  CHECK(OmegaPoly(0).is_zero());
  CHECK((p / Rational(2)).coefficient(1) == Rational(1, 2));
}

namespace {

double closed(double r, double t1, double t2, double t3) {
  return std::sin(r * t1) * std::exp(t2) / (1 + t3 * t3);
}

Jet closed_jet(const BasePoint& b, int order) {
  const Jet r = Jet::variable(b, order, 0), t1 = Jet::variable(b, order, 1),
            t2 = Jet::variable(b, order, 2), t3 = Jet::variable(b, order, 3);
  return sin(r * t1) * exp(t2) / (t3 * t3 + 1.0);
}

}  // namespace

TEST_CASE("jet derivatives agree with finite differences") {
  const BasePoint b{0.7, 0.4, -0.3, 0.9};
  const Jet f = closed_jet(b, 3);
  CHECK(f.value() == doctest::Approx(closed(0.7, 0.4, -0.3, 0.9)).epsilon(1e-14));
  const double dr = oracle::central_diff([&](double x) { return closed(x, 0.4, -0.3, 0.9); }, 0.7);
  CHECK(f.derivative({1, 0, 0, 0}) == doctest::Approx(dr).epsilon(1e-9));
  const double d33 = oracle::central_diff2([&](double x) { return closed(0.7, 0.4, -0.3, x); }, 0.9);
  CHECK(f.derivative({0, 0, 0, 2}) == doctest::Approx(d33).epsilon(1e-7));
  const double dr1 = oracle::central_diff(
      [&](double y) {
        return oracle::central_diff([&](double x) { return closed(x, y, -0.3, 0.9); }, 0.7);
      },
      0.4);
  CHECK(f.derivative({1, 1, 0, 0}) == doctest::Approx(dr1).epsilon(1e-7));
  CHECK(f.partial(1).derivative({1, 0, 0, 0}) == doctest::Approx(f.derivative({1, 1, 0, 0})));
}

TEST_CASE("elementary jet identities") {
  const BasePoint b{1.3, 0.2, 0.5, 0.8};
  const Jet x = Jet::variable(b, 5, 0) * Jet::variable(b, 5, 2) + 0.4;
  const Jet back = exp(log(x));
  for (std::size_t j = 0; j < x.coefficients().size(); ++j)
    CHECK(back.coefficients()[j] == doctest::Approx(x.coefficients()[j]).epsilon(1e-12));
  const Jet s = sin(x), c = cos(x);
  const Jet one = s * s + c * c;
  CHECK(one.value() == doctest::Approx(1.0));
  CHECK(one.max_abs_derivative() - 1.0 < 1e-12);
  const Jet p = pow(x, 2.5);
  const Jet q = exp(log(x) * 2.5);
  CHECK(p.derivative({2, 0, 1, 0}) == doctest::Approx(q.derivative({2, 0, 1, 0})).epsilon(1e-11));
  const Jet r = sqrt(x);
  CHECK((r * r).derivative({1, 0, 1, 0}) == doctest::Approx(x.derivative({1, 0, 1, 0})));
}

TEST_CASE("jet errors") {
  const BasePoint b{1, 0.2, 0.3, 0.4};
  CHECK_THROWS_AS(reciprocal(Jet::constant(b, 2, 0)), std::domain_error);
  CHECK_THROWS_AS(log(Jet::constant(b, 2, -1)), std::domain_error);
  CHECK_THROWS_AS(Jet::variable(b, 2, 0) + Jet::variable(b, 3, 0), std::invalid_argument);
  CHECK_THROWS(Jet::variable(b, kMaxJetOrder + 1, 0));
}
