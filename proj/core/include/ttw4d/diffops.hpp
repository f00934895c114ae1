#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ttw4d/jet.hpp"
#include "ttw4d/ladder_steps.hpp"
#include "ttw4d/model.hpp"

namespace ttw4d {

// Point → jet evaluator with a readable tag. Constant coefficients are folded eagerly.
class Coefficient {
 public:
  using Eval = std::function<Jet(const Point&, int)>;

  Coefficient(std::string tag, Eval eval);
  static Coefficient constant(real value);
  // Function of the single coordinate v (0 = r, 1..3 = θ_i).
  static Coefficient of_coordinate(std::string tag, int v, std::function<Jet(const Jet&)> fn);

  const std::string& tag() const { return tag_; }
  std::optional<real> constant_value() const { return const_; }
  Jet operator()(const Point& p, int order) const;

  Coefficient derivative(const MultiIndex& mu) const;

  friend Coefficient operator+(const Coefficient& a, const Coefficient& b);
  friend Coefficient operator*(const Coefficient& a, const Coefficient& b);
  friend Coefficient operator*(real s, const Coefficient& a);

 private:
  std::string tag_;
  std::shared_ptr<const Eval> eval_;
  std::optional<real> const_;
};

using Field = std::function<Jet(const Point&, int)>;

struct Applied {
  Jet value;
  real scale;  // Σ over terms of |coefficient · derivative| at the base point
};

class DiffOperator {
 public:
  DiffOperator() = default;

  static DiffOperator identity();
  static DiffOperator constant(real c);
  static DiffOperator derivative(const MultiIndex& mu);

  DiffOperator& add_term(const MultiIndex& mu, const Coefficient& c);

  int max_order() const;
  std::size_t term_count() const { return terms_.size(); }
  const std::map<MultiIndex, Coefficient>& terms() const { return terms_; }

  // Result order is f.order() − max_order().
  Jet apply(const Jet& f) const;
  Applied apply_with_scale(const Jet& f) const;
  Jet apply(const Field& f, const Point& p, int out_order) const;

  DiffOperator& operator+=(const DiffOperator& o);
  friend DiffOperator operator+(DiffOperator a, const DiffOperator& b) { return a += b; }
  friend DiffOperator operator-(const DiffOperator& a, const DiffOperator& b);
  friend DiffOperator operator*(real s, const DiffOperator& a);
  // Left multiplication by a function.
  friend DiffOperator operator*(const Coefficient& c, const DiffOperator& a);

  std::string describe() const;

 private:
  std::map<MultiIndex, Coefficient> terms_;
};

// outer ∘ inner, expanded into plain terms (coefficient derivatives taken through jets).
DiffOperator compose(const DiffOperator& outer, const DiffOperator& inner);
DiffOperator commutator(const DiffOperator& a, const DiffOperator& b);

struct Tower {
  DiffOperator H, L1, L2, L3;

  const DiffOperator& L(int i) const;
};

Tower build_tower(const SystemParams& params);

// K0^± with explicit n0, A0 (as printed).
DiffOperator build_radial_ladder(const SystemParams& params, const Rational& n0,
                                 const Rational& A0, Sign sign);
// n may be any rational; on basis functions it is the degree of the factor acted on.
DiffOperator build_jacobi_ladder(const AngularSlotGauge& g, const Rational& n, Sign sign);
DiffOperator build_index_ladder(const AngularSlotGauge& g, const Rational& n, Sign sign);

// Differential operator realising one primitive step (slot gauges resolved from params).
DiffOperator ladder_operator(const SystemParams& params, const LadderStep& step);

// Factor function Ψ0 or Θ for a slot at the given factor state.
Jet factor_function(const SystemParams& params, int slot, const FactorState& f, const Point& p,
                    int order);

// Ξ as a chain of first-order operators, in application order, with J̃ normalisation.
std::vector<DiffOperator> xi_chain(const SystemParams& params, const XiPlan& plan);
Jet apply_chain(const std::vector<DiffOperator>& chain, const Jet& f);

// Printed fifth-order operator for k = (2,1,1), replacements already expanded.
DiffOperator build_example_L1plus(const SystemParams& params);

// Printed coefficient groups of the k = (2,1,1) operator, before replacement.
enum class ExampleGroup { A0sqA1sq, A0four, EA1sq, Esq, EA0sq, A1sq, E, A0sq, bare };
std::string to_string(ExampleGroup g);
std::vector<ExampleGroup> example_groups();
DiffOperator example_group_operator(const SystemParams& params, ExampleGroup g);
// Diagonal value of the group's spectral multiplier at a state, e.g. A0²A1².
OmegaPoly example_group_multiplier(const SystemParams& params, ExampleGroup g,
                                   const QuantumState& state);
// The operator standing for the multiplier after replacement (E → H, A0² → k1² − L1, ...).
DiffOperator example_group_replacement(const SystemParams& params, ExampleGroup g,
                                       const Tower& tower);

}  // namespace ttw4d
