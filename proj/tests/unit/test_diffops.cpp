#include <cmath>

#include "doctest.h"
#include "ttw4d/diffops.hpp"
#include "ttw4d/lattice.hpp"
#include "ttw4d/sampling.hpp"

using namespace ttw4d;

namespace {

const MultiIndex kD0{0, 0, 0, 0};
const MultiIndex kDr{1, 0, 0, 0};

DiffOperator times_r() {
  DiffOperator op;
  op.add_term(kD0, Coefficient::of_coordinate("r", 0, [](const Jet& r) { return r; }));
  return op;
}

double rel(double a, double b, double scale) { return std::abs(a - b) / scale; }

}  // namespace

TEST_CASE("operator algebra basics") {
  const DiffOperator d = DiffOperator::derivative(kDr);
  const DiffOperator c = commutator(d, times_r());
  const Point p{1.2, 0.3, 0.4, 0.5};
  const Jet f = exp(coordinate(p, 2, 0) * coordinate(p, 2, 1));
  // [∂r, r] is the identity; the cancelling ∂r terms stay structurally present.
  const Jet cf = c.apply(f);
  CHECK(cf.value() == doctest::Approx(f.value()));
  CHECK(cf.derivative({1, 0, 0, 0}) == doctest::Approx(f.derivative({1, 0, 0, 0})));
  CHECK(cf.derivative({0, 1, 0, 0}) == doctest::Approx(f.derivative({0, 1, 0, 0})));
  // (∂r ∘ r)f = f + r ∂r f
  const DiffOperator dr = compose(d, times_r());
  CHECK(dr.apply(f).value() == doctest::Approx(f.value() + 1.2 * 0.3 * f.value()));
  CHECK((d - d).term_count() == 0);
  CHECK((2.0 * d).apply(f).value() == doctest::Approx(2 * 0.3 * f.value()));
}

TEST_CASE("tower eigen equations on sampled states") {
  const auto P = SystemParams::parse("2,1,2", "1/3,2/5,3/7,1/2", "3/2");
  const Tower t = build_tower(P);
  for (const QuantumState s : {QuantumState{{0, 0, 0, 0}}, QuantumState{{2, 1, 3, 1}}}) {
    const Wavefunction psi(P, s);
    for (const auto& p : sample_cell_points(P, 5, 42)) {
      const Jet f = psi(p, 2);
      const auto& d = psi.spectral();
      const Applied h = t.H.apply_with_scale(f);
      CHECK(rel(h.value.value(), d.E.eval(real(1.5)) * f.value(), h.scale) < 1e-10);
      for (int i = 1; i <= 3; ++i) {
        const Applied l = t.L(i).apply_with_scale(f);
        CHECK(rel(l.value.value(), d.ell(i).to_real() * f.value(), l.scale) < 1e-10);
      }
    }
  }
}

TEST_CASE("primitive ladders reproduce printed actions") {
  const auto P = SystemParams::parse("3/2,3/2,1", "1/2,1/2,1/2,1/2", "1");
  const QuantumState s{{2, 3, 1, 2}};
  const Point p{0.9, 0.5, 0.4, 0.6};
  const SpectralData d = spectral_chain(P, s);
  // K0− lowers n0 and raises A0 by 2 with coefficient −2ω.
  LadderStep st{LadderKind::k0_minus, 0, FactorState{s[0], d.A0}, {}, {}};
  st.to = ladder_target(st.kind, st.from);
  st.coefficient = ladder_coefficient(st.kind, P, 0, st.from);
  CHECK(st.to.n == 1);
  CHECK(st.to.a == d.A0 + Rational(2));
  CHECK(st.coefficient == OmegaPoly::omega() * Rational(-2));
  const Jet lhs = ladder_operator(P, st).apply(factor_function(P, 0, st.from, p, 1));
  CHECK(lhs.value() == doctest::Approx(-2 * factor_function(P, 0, st.to, p, 0).value()));
  // J+ on slot 2: −2(n+1)(n+a+b+1).
  const AngularSlotGauge g = slot_gauge(P, s, 2);
  st = LadderStep{LadderKind::j_plus, 2, FactorState{s[2], g.a}, {}, {}};
  st.to = ladder_target(st.kind, st.from);
  const OmegaPoly expect = OmegaPoly(Rational(-2) * Rational(2) * (Rational(2) + g.a + g.b));
  CHECK(ladder_coefficient(st.kind, P, 2, st.from) == expect);
  const Jet j = ladder_operator(P, st).apply(factor_function(P, 2, st.from, p, 1));
  CHECK(j.value() == doctest::Approx(expect.eval(real(1)) * factor_function(P, 2, st.to, p, 0).value()));
  CHECK_THROWS(ladder_coefficient(LadderKind::k0_plus, P, 2, st.from));
}

TEST_CASE("composed Xi chain acts like the lattice image") {
  const auto P = SystemParams::parse("2,1,1", "1/2,1/2,1/2,1/2", "1");
  const QuantumState s{{4, 4, 4, 4}};
  const Point p{1.1, 0.35, 0.6, 0.7};
  for (Sign sign : {Sign::plus, Sign::minus}) {
    const XiPlan plan = xi_plan(P, 1, sign, s);
    REQUIRE_FALSE(plan.dropped);
    // Chain acts on the two factors it touches; the rest ride along.
    const auto chain = xi_chain(P, plan);
    const int order = static_cast<int>(chain.size());
    const Wavefunction src(P, s), dst(P, plan.target);
    Jet f = src.factor(0, p, order) * src.factor(1, p, order);
    double scale = 0;
    for (const auto& op : chain) {
      const Applied a = op.apply_with_scale(f);
      scale = std::max(scale, a.scale);
      f = a.value;
    }
    CHECK(f.value() == doctest::Approx(apply_chain(chain, src.factor(0, p, order) *
                                                              src.factor(1, p, order)).value()));
    // Intermediate terms reach ~1e9 while the image is ~1e5, so compare on the term scale.
    const double expect = plan.coefficient.eval(real(1)) * dst.factor(0, p, 0).value() *
                          dst.factor(1, p, 0).value();
    CHECK(rel(f.value(), expect, scale) < 1e-10);
  }
}

TEST_CASE("fifth-order example operator") {
  const auto P = SystemParams::parse("2,1,1", "1/2,1/2,1/2,1/2", "1");
  CHECK(build_example_L1plus(P).max_order() == 5);
  CHECK_THROWS(build_example_L1plus(SystemParams::parse("3,1,1", "1/2,1/2,1/2,1/2", "1")));
  CHECK(example_groups().size() == 9);
}
