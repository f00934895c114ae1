#include "ttw4d/diffops.hpp"

#include <stdexcept>

namespace ttw4d {

namespace {

using RT = std::function<Jet(const Jet& r, const Jet& c4, const Jet& s4)>;

Coefficient rt(std::string tag, RT fn) {
  return Coefficient(std::move(tag), [fn = std::move(fn)](const Point& p, int order) {
    const Jet r = coordinate(p, order, 0);
    const Jet t = coordinate(p, order, 1) * real(4);
    return fn(r, cos(t), sin(t));
  });
}

Jet ipow(const Jet& r, int m) { return pow(r, m); }

constexpr MultiIndex I0{0, 0, 0, 0};
constexpr MultiIndex Dr{1, 0, 0, 0};
constexpr MultiIndex Drr{2, 0, 0, 0};
constexpr MultiIndex Dt{0, 1, 0, 0};
constexpr MultiIndex Drt{1, 1, 0, 0};
constexpr MultiIndex Drrt{2, 1, 0, 0};

void require_211(const SystemParams& P) {
  if (P.k(1) != Rational(2) || P.k(2) != Rational(1) || P.k(3) != Rational(1))
    throw std::invalid_argument("the explicit fifth-order example requires k=(2,1,1)");
}

}  // namespace

std::string to_string(ExampleGroup g) {
  switch (g) {
    case ExampleGroup::A0sqA1sq: return "A0^2 A1^2";
    case ExampleGroup::A0four: return "A0^4";
    case ExampleGroup::EA1sq: return "E A1^2";
    case ExampleGroup::Esq: return "E^2";
    case ExampleGroup::EA0sq: return "E A0^2";
    case ExampleGroup::A1sq: return "A1^2";
    case ExampleGroup::E: return "E";
    case ExampleGroup::A0sq: return "A0^2";
    case ExampleGroup::bare: return "1";
  }
  return "?";
}

std::vector<ExampleGroup> example_groups() {
  return {ExampleGroup::A0sqA1sq, ExampleGroup::A0four, ExampleGroup::EA1sq,
          ExampleGroup::Esq,      ExampleGroup::EA0sq,  ExampleGroup::A1sq,
          ExampleGroup::E,        ExampleGroup::A0sq,   ExampleGroup::bare};
}

DiffOperator example_group_operator(const SystemParams& P, ExampleGroup g) {
  require_211(P);
  const real a2 = (P.a(1) * P.a(1)).to_real();
  DiffOperator d;
  switch (g) {
    case ExampleGroup::A0sqA1sq:
      d.add_term(Dr, rt("-2/r^3", [](auto& r, auto&, auto&) { return -2.0 / ipow(r, 3); }));
      d.add_term(I0, rt("6/r^4", [](auto& r, auto&, auto&) { return 6.0 / ipow(r, 4); }));
      break;
    case ExampleGroup::A0four:
      d.add_term(Dr, rt("-c4/(2r^3)", [](auto& r, auto& c4, auto&) {
                   return -c4 / (2.0 * ipow(r, 3));
                 }));
      d.add_term(Dt, rt("s4/(4r^4)", [](auto& r, auto&, auto& s4) {
                   return s4 / (4.0 * ipow(r, 4));
                 }));
      d.add_term(I0, rt("(1+5c4)/(2r^4)", [](auto& r, auto& c4, auto&) {
                   return (1.0 + 5.0 * c4) / (2.0 * ipow(r, 4));
                 }));
      break;
    case ExampleGroup::EA1sq:
      d.add_term(Dr, rt("-1/r", [](auto& r, auto&, auto&) { return -1.0 / r; }));
      d.add_term(I0, rt("2/r^2", [](auto& r, auto&, auto&) { return 2.0 / ipow(r, 2); }));
      break;
    case ExampleGroup::Esq:
      d.add_term(Dt, rt("s4/16", [](auto&, auto&, auto& s4) { return s4 / 16.0; }));
      d.add_term(I0, rt("c4/4+1/8", [](auto&, auto& c4, auto&) { return c4 / 4.0 + 0.125; }));
      break;
    case ExampleGroup::EA0sq:
      d.add_term(Dr, rt("-c4/(4r)", [](auto& r, auto& c4, auto&) { return -c4 / (4.0 * r); }));
      d.add_term(Dt, rt("s4/(4r^2)", [](auto& r, auto&, auto& s4) {
                   return s4 / (4.0 * ipow(r, 2));
                 }));
      d.add_term(I0, rt("(3c4+1)/(2r^2)", [](auto& r, auto& c4, auto&) {
                   return (3.0 * c4 + 1.0) / (2.0 * ipow(r, 2));
                 }));
      break;
    case ExampleGroup::A1sq:
      d.add_term(Dr, rt("-10/r^3", [](auto& r, auto&, auto&) { return -10.0 / ipow(r, 3); }));
      d.add_term(Drr, rt("4/r^2", [](auto& r, auto&, auto&) { return 4.0 / ipow(r, 2); }));
      d.add_term(I0, rt("-6/r^4", [](auto& r, auto&, auto&) { return -6.0 / ipow(r, 4); }));
      break;
    case ExampleGroup::E:
      d.add_term(Drt, rt("-s4/r", [](auto& r, auto&, auto& s4) { return -s4 / r; }));
      d.add_term(Dr, rt("-(3c4+2-a1^2)/r", [a2](auto& r, auto& c4, auto&) {
                   return -(3.0 * c4 + (2.0 - a2)) / r;
                 }));
      d.add_term(Dt, rt("5s4/(4r^2)", [](auto& r, auto&, auto& s4) {
                   return 5.0 * s4 / (4.0 * ipow(r, 2));
                 }));
      d.add_term(I0, rt("(6c4+5-4a1^2)/(2r^2)", [a2](auto& r, auto& c4, auto&) {
                   return (6.0 * c4 + (5.0 - 4.0 * a2)) / (2.0 * ipow(r, 2));
                 }));
      break;
    case ExampleGroup::A0sq:
      d.add_term(Drrt, rt("-s4/(4r^2)", [](auto& r, auto&, auto& s4) {
                   return -s4 / (4.0 * ipow(r, 2));
                 }));
      d.add_term(Drt, rt("13s4/(4r^3)", [](auto& r, auto&, auto& s4) {
                   return 13.0 * s4 / (4.0 * ipow(r, 3));
                 }));
      d.add_term(Drr, rt("-(4c4+1)/(2r^2)", [](auto& r, auto& c4, auto&) {
                   return -(4.0 * c4 + 1.0) / (2.0 * ipow(r, 2));
                 }));
      d.add_term(Dr, rt("(13+27c4-4a1^2)/(2r^3)", [a2](auto& r, auto& c4, auto&) {
                   return (27.0 * c4 + (13.0 - 4.0 * a2)) / (2.0 * ipow(r, 3));
                 }));
      d.add_term(Dt, rt("-5s4/r^4", [](auto& r, auto&, auto& s4) {
                   return -5.0 * s4 / ipow(r, 4);
                 }));
      d.add_term(I0, rt("-(25c4+20-12a1^2)/(2r^4)", [a2](auto& r, auto& c4, auto&) {
                   return -(25.0 * c4 + (20.0 - 12.0 * a2)) / (2.0 * ipow(r, 4));
                 }));
      break;
    case ExampleGroup::bare:
      d.add_term(Drrt, rt("11s4/(4r^2)", [](auto& r, auto&, auto& s4) {
                   return 11.0 * s4 / (4.0 * ipow(r, 2));
                 }));
      d.add_term(Drr, rt("(11-8a1^2+14c4)/(2r^2)", [a2](auto& r, auto& c4, auto&) {
                   return (14.0 * c4 + (11.0 - 8.0 * a2)) / (2.0 * ipow(r, 2));
                 }));
      d.add_term(Drt, rt("-23s4/(4r^3)", [](auto& r, auto&, auto& s4) {
                   return -23.0 * s4 / (4.0 * ipow(r, 3));
                 }));
      d.add_term(Dr, rt("-(26c4+23-20a1^2)/(2r^3)", [a2](auto& r, auto& c4, auto&) {
                   return -(26.0 * c4 + (23.0 - 20.0 * a2)) / (2.0 * ipow(r, 3));
                 }));
      d.add_term(Dt, rt("-21s4/(4r^4)", [](auto& r, auto&, auto& s4) {
                   return -21.0 * s4 / (4.0 * ipow(r, 4));
                 }));
      d.add_term(I0, rt("-3(10c4+7-4a1^2)/(2r^4)", [a2](auto& r, auto& c4, auto&) {
                   return -3.0 * (10.0 * c4 + (7.0 - 4.0 * a2)) / (2.0 * ipow(r, 4));
                 }));
      break;
  }
  return d;
}

OmegaPoly example_group_multiplier(const SystemParams& P, ExampleGroup g, const QuantumState& s) {
  require_211(P);
  const SpectralData d = spectral_chain(P, s);
  const Rational A0s = d.A0 * d.A0, A1s = d.A1 * d.A1;
  switch (g) {
    case ExampleGroup::A0sqA1sq: return OmegaPoly(A0s * A1s);
    case ExampleGroup::A0four: return OmegaPoly(A0s * A0s);
    case ExampleGroup::EA1sq: return d.E * A1s;
    case ExampleGroup::Esq: return d.E * d.E;
    case ExampleGroup::EA0sq: return d.E * A0s;
    case ExampleGroup::A1sq: return OmegaPoly(A1s);
    case ExampleGroup::E: return d.E;
    case ExampleGroup::A0sq: return OmegaPoly(A0s);
    case ExampleGroup::bare: return OmegaPoly(Rational(1));
  }
  throw std::logic_error("example_group_multiplier");
}

DiffOperator example_group_replacement(const SystemParams& P, ExampleGroup g, const Tower& t) {
  require_211(P);
  const real k1 = P.k(1).to_real(), k2 = P.k(2).to_real();
  const DiffOperator A0s = DiffOperator::constant(k1 * k1) - t.L1;
  const DiffOperator A1s =
      (1.0 / (4 * k1 * k1)) * (DiffOperator::constant(k2 * k2) - 4.0 * t.L2);
  switch (g) {
    case ExampleGroup::A0sqA1sq: return compose(A0s, A1s);
    case ExampleGroup::A0four: return compose(A0s, A0s);
    case ExampleGroup::EA1sq: return compose(t.H, A1s);
    case ExampleGroup::Esq: return compose(t.H, t.H);
    case ExampleGroup::EA0sq: return compose(t.H, A0s);
    case ExampleGroup::A1sq: return A1s;
    case ExampleGroup::E: return t.H;
    case ExampleGroup::A0sq: return A0s;
    case ExampleGroup::bare: return DiffOperator::identity();
  }
  throw std::logic_error("example_group_replacement");
}

DiffOperator build_example_L1plus(const SystemParams& P) {
  require_211(P);
  const Tower t = build_tower(P);
  DiffOperator out;
  for (ExampleGroup g : example_groups())
    out += compose(example_group_operator(P, g), example_group_replacement(P, g, t));
  return out;
}

}  // namespace ttw4d
