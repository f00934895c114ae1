#pragma once

#include <string>
#include <vector>

#include "ttw4d/model.hpp"
#include "ttw4d/omega_poly.hpp"

namespace ttw4d {

enum class Sign { plus, minus };

// K0± act on the radial factor; J± and K^{±a} act on an angular slot.
enum class LadderKind { k0_plus, k0_minus, j_plus, j_minus, ka_plus, ka_minus };

std::string to_string(LadderKind kind);
std::string to_string(Sign s);

// Degree and first parameter of a single separated factor (A0 for the radial factor).
struct FactorState {
  long n = 0;
  Rational a;
};

FactorState ladder_target(LadderKind kind, const FactorState& from);

// Printed action coefficient of one primitive ladder. slot is 0 for K0±, 1..3 otherwise.
OmegaPoly ladder_coefficient(LadderKind kind, const SystemParams& params, int slot,
                             const FactorState& from);

struct LadderStep {
  LadderKind kind;
  int slot;
  FactorState from;
  FactorState to;
  OmegaPoly coefficient;  // printed coefficient of this step
};

// Step-by-step realisation of Ξ_i^± on a lattice state. The Jacobi steps inside Ξ use the
// normalised ladders J̃± = −J±/2; jacobi_scale records that factor.
struct XiPlan {
  int i = 1;
  Sign sign = Sign::plus;
  QuantumState source;
  QuantumState target;
  std::vector<LadderStep> steps;
  bool dropped = false;  // some intermediate degree went negative
  OmegaPoly coefficient;  // product of step coefficients with J̃ normalisation
};

inline const Rational& jacobi_scale() {
  static const Rational s(-1, 2);
  return s;
}

XiPlan xi_plan(const SystemParams& params, int i, Sign sign, const QuantumState& state);

// Closed-form Ξ_1^± coefficients as printed, and the falling-factorial reading of Ξ_1^−.
OmegaPoly xi1_closed_form(const SystemParams& params, Sign sign, const QuantumState& state);
OmegaPoly xi1_minus_falling_form(const SystemParams& params, const QuantumState& state);

}  // namespace ttw4d
