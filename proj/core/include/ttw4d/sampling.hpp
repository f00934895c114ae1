#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "ttw4d/diffops.hpp"
#include "ttw4d/model.hpp"

namespace ttw4d {

// Uniform in [0, 1) from the top 53 bits; identical on every platform.
real unit_uniform(std::mt19937_64& rng);

// r from the middle 60% of (0, 3/√ω), each θ_i from the middle 60% of (0, π/(2k_i)).
Point sample_cell_point(const SystemParams& params, std::mt19937_64& rng);
std::vector<Point> sample_cell_points(const SystemParams& params, std::size_t count,
                                      std::uint64_t seed);

// Smooth closed-form test function: polynomial × Gaussian in r × shifted sinusoids in angles.
struct TestFunction {
  real c0, c1, c2, gauss;
  std::array<real, 3> freq, phase, shift;

  Jet operator()(const Point& p, int order) const;
};

TestFunction random_test_function(std::mt19937_64& rng);
std::vector<TestFunction> random_test_functions(std::size_t count, std::uint64_t seed);

}  // namespace ttw4d
