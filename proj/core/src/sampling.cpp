#include "ttw4d/sampling.hpp"

#include <cmath>
#include <numbers>

namespace ttw4d {

real unit_uniform(std::mt19937_64& rng) {
  return static_cast<real>(rng() >> 11) * static_cast<real>(0x1.0p-53);
}

Point sample_cell_point(const SystemParams& P, std::mt19937_64& rng) {
  const real w = P.formal() ? real(1) : P.omega().to_real();
  auto middle = [&rng](real hi) { return hi * (real(0.2) + real(0.6) * unit_uniform(rng)); };
  Point p;
  p.r = middle(3 / std::sqrt(w));
  const real half_pi = std::numbers::pi_v<real> / 2;
  p.theta1 = middle(half_pi / P.k(1).to_real());
  p.theta2 = middle(half_pi / P.k(2).to_real());
  p.theta3 = middle(half_pi / P.k(3).to_real());
  return p;
}

std::vector<Point> sample_cell_points(const SystemParams& P, std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Point> out;
  out.reserve(count);
  for (std::size_t j = 0; j < count; ++j) out.push_back(sample_cell_point(P, rng));
  return out;
}

Jet TestFunction::operator()(const Point& p, int order) const {
  const Jet r = coordinate(p, order, 0);
  Jet f = (r * c1 + c0 + r * r * c2) * exp(r * r * (-gauss));
  for (int i = 0; i < 3; ++i) {
    const Jet th = coordinate(p, order, i + 1);
    f = f * (sin(th * freq[i] + phase[i]) + shift[i]);
  }
  return f;
}

TestFunction random_test_function(std::mt19937_64& rng) {
  // Rational frequencies p/q with small p, q.
  auto small_rational = [&rng](int pmax, int qmax) {
    const int p = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(pmax));
    const int q = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(qmax));
    return static_cast<real>(p) / static_cast<real>(q);
  };
  TestFunction t{};
  t.c0 = real(0.5) + unit_uniform(rng);
  t.c1 = unit_uniform(rng) - real(0.5);
  t.c2 = unit_uniform(rng) - real(0.5);
  t.gauss = real(0.1) + real(0.4) * unit_uniform(rng);
  for (int i = 0; i < 3; ++i) {
    t.freq[i] = small_rational(5, 3);
    t.phase[i] = unit_uniform(rng) * std::numbers::pi_v<real>;
    t.shift[i] = real(1.5) + unit_uniform(rng);
  }
  return t;
}

std::vector<TestFunction> random_test_functions(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<TestFunction> out;
  for (std::size_t j = 0; j < count; ++j) out.push_back(random_test_function(rng));
  return out;
}

}  // namespace ttw4d
