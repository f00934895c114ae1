#pragma once

#include <array>
#include <compare>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ttw4d/jet.hpp"
#include "ttw4d/omega_poly.hpp"
#include "ttw4d/rational.hpp"

namespace ttw4d {

struct QuantumState {
  std::array<long, 4> n{0, 0, 0, 0};

  long& operator[](int i) { return n[static_cast<std::size_t>(i)]; }
  long operator[](int i) const { return n[static_cast<std::size_t>(i)]; }
  bool on_lattice() const { return n[0] >= 0 && n[1] >= 0 && n[2] >= 0 && n[3] >= 0; }
  std::string str() const;

  friend auto operator<=>(const QuantumState&, const QuantumState&) = default;
};

// Parameters of the system. The coupling constants β are derived from a and never stored.
// omega() is empty in formal mode; lattice computations always treat ω symbolically.
class SystemParams {
 public:
  SystemParams(std::array<Rational, 3> k, std::array<Rational, 4> a,
               std::optional<Rational> omega = std::nullopt);

  // Comma-separated rational lists, e.g. "2,1,1" and "1/2,1/2,1/2,1/2".
  static SystemParams parse(std::string_view k, std::string_view a,
                            std::optional<std::string_view> omega = std::nullopt);

  const Rational& k(int i) const;  // i = 1..3
  const Rational& a(int i) const;  // i = 1..4
  // k_{i-1} with k_0 = 1.
  Rational kappa(int i) const;
  // Reduced p_i/q_i = k1, k2/k1, k3/k2.
  long p(int i) const;
  long q(int i) const;
  Rational beta(int i) const;  // i = 1..4
  // Constants (1, 1/4, 0) of the cubic and bracket relations.
  static Rational alpha(int i);

  bool formal() const { return !omega_.has_value(); }
  const Rational& omega() const;
  SystemParams with_omega(std::optional<Rational> omega) const;

  std::string k_str() const;
  std::string a_str() const;

 private:
  std::array<Rational, 3> k_;
  std::array<Rational, 4> a_;
  std::array<long, 3> p_{}, q_{};
  std::optional<Rational> omega_;
};

std::vector<Rational> parse_rational_list(std::string_view text);

struct SpectralData {
  Rational A2, A1, A0;
  Rational ell3, ell2, ell1;
  OmegaPoly E;

  // A_j for j = 0, 1, 2.
  const Rational& A(int j) const;
  // ℓ_i for i = 1, 2, 3.
  const Rational& ell(int i) const;
};

SpectralData spectral_chain(const SystemParams& params, const QuantumState& state);

// Expanded closed form of the energy; spectral_chain asserts agreement with −ω(4n₀+2A₀+2).
OmegaPoly energy_expanded(const SystemParams& params, const QuantumState& state);

struct AngularSlotGauge {
  int slot = 3;
  Rational a, b, c, d, k;

  Rational N(long n) const { return 2 * Rational(n) + a + b + 1; }
};

// Gauge of slot 1..3 for the given lattice state.
AngularSlotGauge slot_gauge(const SystemParams& params, const QuantumState& state, int slot);
// Same slot layout with an explicit first Jacobi parameter (used along ladder chains).
AngularSlotGauge slot_gauge_with(const SystemParams& params, int slot, const Rational& a);

struct Point {
  real r = 1, theta1 = 0, theta2 = 0, theta3 = 0;

  BasePoint coords() const { return {r, theta1, theta2, theta3}; }
  std::string str() const;
};

bool inside_cell(const SystemParams& params, const Point& p);
void require_inside_cell(const SystemParams& params, const Point& p);

// Coordinate jet of variable v (0 = r, 1..3 = θ_i).
Jet coordinate(const Point& p, int order, int v);

// ω^{A/2} e^{−ωr²/2} r^{A−1} L_n^{(A)}(ωr²).
Jet radial_factor(real omega, long n0, const Rational& A0, const Jet& r);
// sin^{a+c}(kθ) cos^{b+d}(kθ) P_n^{(a,b)}(cos 2kθ).
Jet angular_factor(const AngularSlotGauge& g, long n, const Jet& theta);

class Wavefunction {
 public:
  Wavefunction(const SystemParams& params, const QuantumState& state);

  // factor 0 is radial, 1..3 angular.
  Jet factor(int which, const Point& p, int order) const;
  Jet operator()(const Point& p, int order) const;

  const SpectralData& spectral() const { return spec_; }
  const QuantumState& state() const { return state_; }

 private:
  SystemParams params_;
  QuantumState state_;
  SpectralData spec_;
};

struct DegeneracyClass {
  OmegaPoly energy;
  std::vector<QuantumState> states;
};

std::vector<QuantumState> enumerate_states(long nmax);

// Classes of equal exact energy among states with all n_i ≤ nmax, ground state first.
std::vector<DegeneracyClass> degeneracy_classes(const SystemParams& params, long nmax);

}  // namespace ttw4d
