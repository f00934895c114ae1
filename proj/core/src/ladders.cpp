#include "ttw4d/diffops.hpp"

#include <stdexcept>

namespace ttw4d {

namespace {

MultiIndex unit(int v) {
  MultiIndex mu{0, 0, 0, 0};
  mu[v] = 1;
  return mu;
}

constexpr MultiIndex kNone{0, 0, 0, 0};

}  // namespace

DiffOperator build_radial_ladder(const SystemParams& P, const Rational& n0, const Rational& A0,
                                 Sign sign) {
  const real w = P.omega().to_real();
  const real lead = (sign == Sign::plus ? 1 - A0 : 1 + A0).to_real();
  const real c0 = ((2 * n0 + A0 + 1)).to_real() * w;
  const real c2 = (1 - A0 * A0).to_real();
  DiffOperator op;
  op.add_term(unit(0), Coefficient::of_coordinate("(1-+A0)/r", 0,
                                                  [lead](const Jet& r) { return lead / r; }));
  op.add_term(kNone, Coefficient::of_coordinate("(2n0+A0+1)w + (1-A0^2)/r^2", 0,
                                                [c0, c2](const Jet& r) {
                                                  return c0 + c2 / (r * r);
                                                }));
  return op;
}

DiffOperator build_jacobi_ladder(const AngularSlotGauge& g, const Rational& n, Sign sign) {
  const Rational N = 2 * n + g.a + g.b + 1;
  const real k = g.k.to_real();
  const int v = g.slot;
  DiffOperator op;
  real lead, cc, c0;
  if (sign == Sign::plus) {
    lead = -((N + 1) / (2 * g.k)).to_real();
    cc = -((N + 1) * (N + 1 - g.c - g.d) / 2).to_real();
    c0 = -((-(N + 1) * (g.c - g.d) + g.a * g.a - g.b * g.b) / 2).to_real();
  } else {
    lead = ((N - 1) / (2 * g.k)).to_real();
    cc = -((N - 1) * (N - 1 + g.c + g.d) / 2).to_real();
    c0 = -(((N - 1) * (g.c - g.d) + g.a * g.a - g.b * g.b) / 2).to_real();
  }
  op.add_term(unit(v), Coefficient::of_coordinate("J sin(2k t)", v, [lead, k](const Jet& th) {
                return sin(th * (2 * k)) * lead;
              }));
  op.add_term(kNone, Coefficient::of_coordinate("J cos(2k t) + const", v, [cc, c0, k](const Jet& th) {
                return cos(th * (2 * k)) * cc + c0;
              }));
  return op;
}

DiffOperator build_index_ladder(const AngularSlotGauge& g, const Rational& n, Sign sign) {
  const Rational& a = g.a;
  const Rational& b = g.b;
  const real k = g.k.to_real();
  const int v = g.slot;
  real lead, c0, cs;
  if (sign == Sign::plus) {
    lead = -((1 - a) / g.k).to_real();
    c0 = (-2 * (n * (n + a + b + 1) + a * (a + b)) - (1 - a) * (a + g.c + b + g.d)).to_real();
    cs = (-(1 - a) * (a - g.c)).to_real();
  } else {
    lead = -((1 + a) / g.k).to_real();
    c0 = (-2 * n * (n + a + b + 1) - (1 + a) * (a + g.c + b + g.d)).to_real();
    cs = ((1 + a) * (a + g.c)).to_real();
  }
  DiffOperator op;
  op.add_term(unit(v), Coefficient::of_coordinate("K cot(k t)", v, [lead, k](const Jet& th) {
                return cos(th * k) / sin(th * k) * lead;
              }));
  op.add_term(kNone, Coefficient::of_coordinate("K const + c/sin^2(k t)", v,
                                                [c0, cs, k](const Jet& th) {
                                                  const Jet s = sin(th * k);
                                                  return c0 + cs / (s * s);
                                                }));
  return op;
}

DiffOperator ladder_operator(const SystemParams& P, const LadderStep& st) {
  const Rational n(st.from.n);
  switch (st.kind) {
    case LadderKind::k0_plus: return build_radial_ladder(P, n, st.from.a, Sign::plus);
    case LadderKind::k0_minus: return build_radial_ladder(P, n, st.from.a, Sign::minus);
    case LadderKind::j_plus:
      return build_jacobi_ladder(slot_gauge_with(P, st.slot, st.from.a), n, Sign::plus);
    case LadderKind::j_minus:
      return build_jacobi_ladder(slot_gauge_with(P, st.slot, st.from.a), n, Sign::minus);
    case LadderKind::ka_plus:
      return build_index_ladder(slot_gauge_with(P, st.slot, st.from.a), n, Sign::plus);
    case LadderKind::ka_minus:
      return build_index_ladder(slot_gauge_with(P, st.slot, st.from.a), n, Sign::minus);
  }
  throw std::logic_error("ladder_operator");
}

Jet factor_function(const SystemParams& P, int slot, const FactorState& f, const Point& p,
                    int order) {
  require_inside_cell(P, p);
  const Jet x = coordinate(p, order, slot);
  if (slot == 0) return radial_factor(P.omega().to_real(), f.n, f.a, x);
  return angular_factor(slot_gauge_with(P, slot, f.a), f.n, x);
}

std::vector<DiffOperator> xi_chain(const SystemParams& P, const XiPlan& plan) {
  std::vector<DiffOperator> chain;
  for (const auto& st : plan.steps) {
    DiffOperator op = ladder_operator(P, st);
    if (st.kind == LadderKind::j_plus || st.kind == LadderKind::j_minus)
      op = jacobi_scale().to_real() * op;
    chain.push_back(std::move(op));
  }
  return chain;
}

}  // namespace ttw4d
