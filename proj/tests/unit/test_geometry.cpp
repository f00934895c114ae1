#include <cmath>
#include <numbers>

#include "doctest.h"
#include "ttw4d/geometry.hpp"
#include "ttw4d/sampling.hpp"

using namespace ttw4d;

namespace {

SystemParams params(const char* k) { return SystemParams::parse(k, "1/3,2/5,3/7,1/2", "1"); }

}  // namespace

TEST_CASE("probe curvature for k = (2,1,1)") {
  const auto P = params("2,1,1");
  const Point probe{1, std::numbers::pi / 8, 0.5, 0.6};
  const CurvatureReport rep = curvature_at(P, probe);
  CHECK(rep.scalar == doctest::Approx(6.0).epsilon(1e-12));
  CHECK(rep.weyl_invariant == doctest::Approx(12.0).epsilon(1e-12));
  // r → 2r quarters both.
  const CurvatureReport far = curvature_at(P, Point{2, std::numbers::pi / 8, 0.5, 0.6});
  CHECK(far.weyl_invariant == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(far.scalar == doctest::Approx(1.5).epsilon(1e-12));
}

TEST_CASE("flat and conformally flat cases") {
  for (const auto& p : sample_cell_points(params("1,1,1"), 10, 1)) {
    const CurvatureReport rep = curvature_at(params("1,1,1"), p);
    CHECK(std::abs(rep.scalar) < 1e-10);
    CHECK(rep.weyl_invariant < 1e-10);
  }
  const auto P = params("3/2,3/2,1");
  for (const auto& p : sample_cell_points(P, 10, 2)) {
    const CurvatureReport rep = curvature_at(P, p);
    CHECK(rep.weyl_invariant < 1e-10);
    CHECK(std::abs(rep.scalar - closed_form_scalar(P, p)) < 1e-9 * std::abs(closed_form_scalar(P, p)));
  }
}

TEST_CASE("tensor symmetries") {
  const auto P = params("2,1,2");
  for (const auto& p : sample_cell_points(P, 10, 3)) {
    const CurvatureReport rep = curvature_at(P, p);
    CHECK(symmetry_bounds(rep).worst() < 1e-10);
  }
  CHECK_THROWS_AS(curvature_at(P, Point{1, 1.0, 0.2, 0.2}), std::domain_error);
}

TEST_CASE("Laplace-Beltrami operator") {
  const auto P = params("2,1,1");
  const DiffOperator lb = laplace_beltrami(P);
  const Point p{1.3, 0.3, 0.5, 0.7};
  const Jet r = coordinate(p, 2, 0);
  CHECK(lb.apply(r * r).value() == doctest::Approx(8.0));
  // ∂θ1 coefficient: 2k1 cot(k1θ1)/r².
  const Coefficient& c = lb.terms().at(MultiIndex{0, 1, 0, 0});
  CHECK(c(p, 0).value() == doctest::Approx(4 / std::tan(0.6) / (1.3 * 1.3)).epsilon(1e-12));
  // ∂θ3² coefficient: 1/(r² sin²(k1θ1) sin²(k2θ2)).
  const Coefficient& c33 = lb.terms().at(MultiIndex{0, 0, 0, 2});
  const double s1 = std::sin(0.6), s2 = std::sin(0.5);
  CHECK(c33(p, 0).value() == doctest::Approx(1 / (1.69 * s1 * s1 * s2 * s2)));
}

TEST_CASE("conformal identity") {
  for (const char* k : {"1,1,1", "2,1,1", "1,2,1"}) {
    const auto P = params(k);
    const auto fs = random_test_functions(3, 17);
    for (const auto& p : sample_cell_points(P, 4, 5))
      for (const auto& tf : fs) {
        const auto c = conformal_identity_check(
            P, p, [&tf](const Point& q, int o) { return tf(q, o); });
        CHECK(c.relative < 1e-8);
        CHECK(c.signed_branch == (std::string(k) == "1,2,1"));
      }
  }
}
