#include <cmath>
#include <numbers>

#include "doctest.h"
#include "oracles.hpp"
#include "ttw4d/diffops.hpp"
#include "ttw4d/model.hpp"
#include "ttw4d/sampling.hpp"

using namespace ttw4d;

namespace {

SystemParams params(const char* k, const char* a = "1/2,1/2,1/2,1/2", const char* w = "1") {
  return SystemParams::parse(k, a, w);
}

}  // namespace

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(params("0,1,1"), std::invalid_argument);
  CHECK_THROWS_AS(params("1,1"), std::invalid_argument);
  CHECK_THROWS_AS(params("1,1,1", "1/2,1/2,1/2"), std::invalid_argument);
  CHECK_THROWS_AS(params("1,1,1", "1/2,1/2,1/2,1/2", "-1"), std::invalid_argument);
  CHECK_THROWS_AS(params("1,1,1", "1/2,1/2,0.5,1/2"), std::invalid_argument);
  const auto P = params("3/2,3/2,1");
  CHECK(P.p(1) == 3);
  CHECK(P.q(1) == 2);
  CHECK(P.p(3) == 2);
  CHECK(P.q(3) == 3);
  CHECK(SystemParams::parse("1,1,1", "1/2,1/2,1/2,1/2").formal());
}

TEST_CASE("spectral chain examples") {
  const auto flat = params("1,1,1");
  const SpectralData g = spectral_chain(flat, QuantumState{});
  CHECK(g.E == OmegaPoly::omega() * Rational(-12));
  CHECK(g.A2 == Rational(2));
  // E = −2ω(2n0 + 2k1n1 + 2k2n2 + 2k3n3 + k1a1 + k2a2 + k3a3 + k3a4 + k1 + k2 + k3 + 1)
  const auto P = params("2,1,1", "1/3,2/5,3/7,1/2");
  for (const auto& s : enumerate_states(3)) {
    const SpectralData d = spectral_chain(P, s);
    const Rational inner = Rational(2 * s[0]) + Rational(4 * s[1]) + Rational(2 * s[2]) +
                           Rational(2 * s[3]) + Rational(2) * Rational(1, 3) + Rational(2, 5) +
                           Rational(3, 7) + Rational(1, 2) + Rational(2 + 1 + 1 + 1);
    CHECK(d.E == OmegaPoly::omega() * (Rational(-2) * inner));
    CHECK(d.ell3 == -P.k(3) * P.k(3) * pow(Rational(2 * s[3]) + P.a(3) + P.a(4) + Rational(1), 2));
    CHECK(d.ell1 == P.k(1) * P.k(1) - d.A0 * d.A0);
  }
}

TEST_CASE("degeneracy classes") {
  const auto P = params("2,1,1");
  const auto classes = degeneracy_classes(P, 2);
  CHECK(classes.front().states.size() == 1);
  CHECK(classes.front().states.front() == QuantumState{});
  bool shared = false;
  for (const auto& c : classes) {
    const auto has = [&](QuantumState s) {
      return std::find(c.states.begin(), c.states.end(), s) != c.states.end();
    };
    if (has(QuantumState{{2, 0, 0, 0}})) shared = has(QuantumState{{0, 1, 0, 0}});
  }
  CHECK(shared);
  std::size_t total = 0;
  for (const auto& c : classes) total += c.states.size();
  CHECK(total == 81);
}

TEST_CASE("cell guard and formal mode") {
  const auto P = params("2,1,1");
  CHECK(inside_cell(P, Point{1, 0.3, 0.4, 0.5}));
  CHECK_FALSE(inside_cell(P, Point{1, 0.9, 0.4, 0.5}));  // k1 θ1 > π/2
  CHECK_FALSE(inside_cell(P, Point{-1, 0.3, 0.4, 0.5}));
  CHECK_THROWS_AS(require_inside_cell(P, Point{1, 0.9, 0.4, 0.5}), std::domain_error);
  CHECK_THROWS_AS(Wavefunction(SystemParams::parse("1,1,1", "1/2,1/2,1/2,1/2"), QuantumState{}),
                  std::logic_error);
}

TEST_CASE("ground state wavefunction closed form") {
  // n = 0: every polynomial factor is 1.
  const auto P = params("1,1,1");
  const Wavefunction psi(P, QuantumState{});
  const Point p{0.8, 0.5, 0.6, 0.7};
  const auto& d = psi.spectral();
  const double A0 = d.A0.to_double(), A1 = d.A1.to_double(), A2 = d.A2.to_double();
  const double expect = std::exp(-0.32) * std::pow(0.8, A0 - 1) *
                        std::pow(std::sin(0.5), A1 - 0.5) * std::pow(std::cos(0.5), 1.0) *
                        std::pow(std::sin(0.6), A2) * std::pow(std::cos(0.6), 0.5 + 0.5) *
                        std::pow(std::sin(0.7), 1.0) * std::pow(std::cos(0.7), 1.0);
  CHECK(psi(p, 0).value() == doctest::Approx(expect).epsilon(1e-12));
}

TEST_CASE("sampled points stay in the middle of the cell") {
  const auto P = params("3/2,3/2,1", "1/2,1/2,1/2,1/2", "4");
  const auto pts = sample_cell_points(P, 200, 99);
  const double R = 3 / std::sqrt(4.0);
  for (const auto& p : pts) {
    CHECK(p.r > 0.2 * R);
    CHECK(p.r < 0.8 * R);
    CHECK(p.theta1 < 0.8 * std::numbers::pi / 3);
    CHECK(inside_cell(P, p));
  }
  CHECK(sample_cell_points(P, 5, 7)[3].theta2 == sample_cell_points(P, 5, 7)[3].theta2);
}
