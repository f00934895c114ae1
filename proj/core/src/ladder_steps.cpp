#include "ttw4d/ladder_steps.hpp"

#include <stdexcept>

namespace ttw4d {

std::string to_string(LadderKind kind) {
  switch (kind) {
    case LadderKind::k0_plus: return "K0+";
    case LadderKind::k0_minus: return "K0-";
    case LadderKind::j_plus: return "J+";
    case LadderKind::j_minus: return "J-";
    case LadderKind::ka_plus: return "K+a";
    case LadderKind::ka_minus: return "K-a";
  }
  return "?";
}

std::string to_string(Sign s) { return s == Sign::plus ? "+" : "-"; }

FactorState ladder_target(LadderKind kind, const FactorState& f) {
  switch (kind) {
    case LadderKind::k0_plus: return {f.n + 1, f.a - 2};
    case LadderKind::k0_minus: return {f.n - 1, f.a + 2};
    case LadderKind::j_plus: return {f.n + 1, f.a};
    case LadderKind::j_minus: return {f.n - 1, f.a};
    case LadderKind::ka_plus: return {f.n + 1, f.a - 2};
    case LadderKind::ka_minus: return {f.n - 1, f.a + 2};
  }
  throw std::logic_error("ladder_target");
}

OmegaPoly ladder_coefficient(LadderKind kind, const SystemParams& P, int slot,
                             const FactorState& f) {
  const bool radial = kind == LadderKind::k0_plus || kind == LadderKind::k0_minus;
  if (radial != (slot == 0)) throw std::invalid_argument("ladder kind does not act on this slot");
  const Rational n(f.n);
  const Rational& a = f.a;
  const OmegaPoly w = OmegaPoly::omega();
  if (radial) {
    if (kind == LadderKind::k0_minus) return w * Rational(-2);
    return w * (-2 * (n + 1) * (n + a));
  }
  const Rational b = slot_gauge_with(P, slot, a).b;
  switch (kind) {
    case LadderKind::j_plus: return OmegaPoly(-2 * (n + 1) * (n + a + b + 1));
    case LadderKind::j_minus: return OmegaPoly(-2 * (n + a) * (n + b));
    case LadderKind::ka_plus: return OmegaPoly(2 * (n + 1) * (n + a));
    case LadderKind::ka_minus: return OmegaPoly(2 * (n + a + b + 1) * (n + b));
    default: break;
  }
  throw std::logic_error("ladder_coefficient");
}

XiPlan xi_plan(const SystemParams& P, int i, Sign sign, const QuantumState& s) {
  if (i < 1 || i > 3) throw std::out_of_range("xi index must be 1, 2 or 3");
  XiPlan plan;
  plan.i = i;
  plan.sign = sign;
  plan.source = s;
  plan.target = s;
  plan.coefficient = OmegaPoly(Rational(1));

  const SpectralData d = spectral_chain(P, s);
  const long p = P.p(i), q = P.q(i);
  const bool up = sign == Sign::plus;

  const int upper = i;      // slot stepped by J
  const int lower = i - 1;  // slot stepped by K (0 = radial)
  FactorState fu{s[upper], upper == 3 ? P.a(3) : d.A(upper)};
  FactorState fl{s[lower], d.A(lower)};

  const LadderKind jk = up ? LadderKind::j_plus : LadderKind::j_minus;
  LadderKind kk;
  if (lower == 0)
    kk = up ? LadderKind::k0_minus : LadderKind::k0_plus;
  else
    kk = up ? LadderKind::ka_minus : LadderKind::ka_plus;

  auto run = [&](LadderKind kind, int slot, FactorState& f, long count, const Rational& scale) {
    for (long c = 0; c < count && !plan.dropped; ++c) {
      LadderStep st{kind, slot, f, ladder_target(kind, f), ladder_coefficient(kind, P, slot, f)};
      plan.coefficient *= st.coefficient * scale;
      f = st.to;
      plan.steps.push_back(st);
      if (f.n < 0) plan.dropped = true;
    }
  };
  run(jk, upper, fu, q, jacobi_scale());
  run(kk, lower, fl, p, Rational(1));

  plan.target[upper] = fu.n;
  plan.target[lower] = fl.n;
  if (plan.dropped) {
    plan.coefficient = OmegaPoly();
    return plan;
  }
  // The parameter shift along the chain must agree with the chain recomputed at the target.
  const SpectralData t = spectral_chain(P, plan.target);
  if (t.A(lower) != fl.a || (upper < 3 && t.A(upper) != fu.a))
    throw std::logic_error("xi_plan: ladder parameter shift disagrees with spectral chain");
  return plan;
}

OmegaPoly xi1_closed_form(const SystemParams& P, Sign sign, const QuantumState& s) {
  const SpectralData d = spectral_chain(P, s);
  const long p = P.p(1), q = P.q(1);
  const Rational n0(s[0]), n1(s[1]);
  const Rational& a1 = P.a(1);
  const OmegaPoly pre = OmegaPoly::monomial(pow(Rational(-2), static_cast<int>(p)), p);
  const auto P1 = [](const Rational& x, long m) { return pochhammer(x, static_cast<unsigned>(m)); };
  if (sign == Sign::plus) return pre * (P1(n1 + 1, q) * P1(n1 + d.A1 + a1 + 1, q));
  return pre * (P1(-n1 - d.A1, q) * P1(-n1 - a1, q) * P1(n0 + p, p) * P1(n0 + d.A0, p));
}

OmegaPoly xi1_minus_falling_form(const SystemParams& P, const QuantumState& s) {
  const SpectralData d = spectral_chain(P, s);
  const long p = P.p(1), q = P.q(1);
  const Rational n0(s[0]), n1(s[1]);
  const OmegaPoly pre = OmegaPoly::monomial(pow(Rational(-2), static_cast<int>(p)), p);
  return pre * (pochhammer(-n1 - d.A1, static_cast<unsigned>(q)) *
                pochhammer(-n1 - P.a(1), static_cast<unsigned>(q)) *
                falling_factorial(n0 + p, static_cast<unsigned>(p)) *
                falling_factorial(n0 + d.A0, static_cast<unsigned>(p)));
}

}  // namespace ttw4d
