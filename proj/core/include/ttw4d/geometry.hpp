#pragma once

#include <array>

#include "ttw4d/diffops.hpp"
#include "ttw4d/model.hpp"

namespace ttw4d {

using Mat4 = std::array<std::array<real, 4>, 4>;
using Tensor3 = std::array<Mat4, 4>;
using Tensor4 = std::array<Tensor3, 4>;

// R^a_{bcd} = ∂_c Γ^a_{db} − ∂_d Γ^a_{cb} + Γ^a_{ce}Γ^e_{db} − Γ^a_{de}Γ^e_{cb}, times this sign.
inline constexpr int kRiemannSign = 1;

struct CurvatureReport {
  Point point;
  std::array<real, 4> metric{};  // diagonal g_aa
  Tensor3 christoffel{};         // Γ^a_{bc}
  Tensor4 riemann{};             // R^a_{bcd}
  Tensor4 riemann_lower{};       // R_{abcd}
  real riemann_scale = 0;        // max over components of Σ|individual terms|, lowered
  Mat4 ricci{};
  real scalar = 0;
  Tensor4 weyl{};  // C_{abcd}
  real weyl_invariant = 0;
};

// Diagonal metric components g_aa as jets.
std::array<Jet, 4> metric_jets(const SystemParams& params, const Point& p, int order);

CurvatureReport curvature_at(const SystemParams& params, const Point& p);

// √(3 C_{abcd}C^{abcd}); throws if the contraction is negative beyond rounding.
real weyl_invariant(const CurvatureReport& report);

struct SymmetryBounds {
  real scale = 0;  // riemann_scale, or max |R_abcd| if larger
  real antisym_first = 0, antisym_last = 0, pair_exchange = 0, bianchi = 0;
  real weyl_trace = 0, weyl_symmetry = 0;

  real worst() const;
};

SymmetryBounds symmetry_bounds(const CurvatureReport& report);

// Closed forms to compare against.
real closed_form_scalar(const SystemParams& params, const Point& p);
// Signed 2(k1²−k2²)/(r² sin²(k1θ1)).
real closed_form_weyl_signed(const SystemParams& params, const Point& p);

DiffOperator laplace_beltrami(const SystemParams& params);
// V0 with α = −ω².
Coefficient potential_v0(const SystemParams& params);

struct ConformalCheck {
  real lhs = 0, rhs = 0, residual = 0, scale = 0, relative = 0;
  bool signed_branch = false;  // 𝒲 taken with the sign of k1² − k2²
};

ConformalCheck conformal_identity_check(const SystemParams& params, const Point& p,
                                        const Field& f);

}  // namespace ttw4d
