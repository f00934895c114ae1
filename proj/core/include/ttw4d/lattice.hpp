#pragma once

#include <functional>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "ttw4d/ladder_steps.hpp"
#include "ttw4d/model.hpp"
#include "ttw4d/omega_poly.hpp"

namespace ttw4d {

// Finite combination of basis states with coefficients in ℚ[ω].
class LatticeVector {
 public:
  using Map = std::map<QuantumState, OmegaPoly>;

  LatticeVector() = default;
  static LatticeVector single(const QuantumState& s, const OmegaPoly& c);

  // Off-lattice states are dropped; zero coefficients are never stored.
  void add(const QuantumState& s, const OmegaPoly& c);

  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  OmegaPoly coefficient(const QuantumState& s) const;
  Map::const_iterator begin() const { return terms_.begin(); }
  Map::const_iterator end() const { return terms_.end(); }

  LatticeVector& operator+=(const LatticeVector& o);
  LatticeVector& operator-=(const LatticeVector& o);
  LatticeVector& operator*=(const OmegaPoly& s);
  LatticeVector& operator/=(const Rational& s);
  friend LatticeVector operator+(LatticeVector a, const LatticeVector& b) { return a += b; }
  friend LatticeVector operator-(LatticeVector a, const LatticeVector& b) { return a -= b; }
  friend LatticeVector operator*(LatticeVector a, const OmegaPoly& s) { return a *= s; }
  friend LatticeVector operator*(const OmegaPoly& s, LatticeVector a) { return a *= s; }
  friend bool operator==(const LatticeVector& a, const LatticeVector& b) {
    return a.terms_ == b.terms_;
  }

  std::string str() const;

 private:
  Map terms_;
};

// Exact linear operator given by its action on basis states.
class LatticeOperator {
 public:
  using Rule = std::function<LatticeVector(const QuantumState&)>;

  LatticeOperator(std::string name, Rule rule);
  static LatticeOperator diagonal(std::string name,
                                  std::function<OmegaPoly(const QuantumState&)> value);
  static LatticeOperator zero();

  const std::string& name() const { return name_; }
  LatticeVector operator()(const QuantumState& s) const { return (*rule_)(s); }
  LatticeVector operator()(const LatticeVector& v) const;

  LatticeOperator scaled(const OmegaPoly& s) const;
  LatticeOperator renamed(std::string name) const;

  friend LatticeOperator operator+(const LatticeOperator& a, const LatticeOperator& b);
  friend LatticeOperator operator-(const LatticeOperator& a, const LatticeOperator& b);
  // a * b applies b first.
  friend LatticeOperator operator*(const LatticeOperator& a, const LatticeOperator& b);

 private:
  std::string name_;
  std::shared_ptr<const Rule> rule_;
};

LatticeOperator commutator(const LatticeOperator& a, const LatticeOperator& b);
LatticeOperator anticommutator(const LatticeOperator& a, const LatticeOperator& b);
// Sum over all six orderings.
LatticeOperator sym_triple(const LatticeOperator& a, const LatticeOperator& b,
                           const LatticeOperator& c);
// abc + bca + cab.
LatticeOperator cyclic_triple(const LatticeOperator& a, const LatticeOperator& b,
                              const LatticeOperator& c);

// Single primitive ladder on a lattice state (A-shifts implicit).
LatticeVector ladder_action(LadderKind kind, int slot, const SystemParams& params,
                            const QuantumState& state);
LatticeVector xi_action(int i, Sign sign, const SystemParams& params, const QuantumState& state);
LatticeVector Lpm_action(int i, Sign sign, const SystemParams& params, const QuantumState& state);

enum class PConvention { printed, antisymmetric, antisymmetric_reversed };
std::string to_string(PConvention c);
PConvention parse_p_convention(const std::string& text);
std::vector<PConvention> all_p_conventions();

enum class TripleConvention { full, cyclic };
std::string to_string(TripleConvention c);

LatticeVector P_action(int i, Sign sign, const SystemParams& params, const QuantumState& state,
                       PConvention conv);

namespace ops {
LatticeOperator H(const SystemParams& params);
// L_0 is H.
LatticeOperator L(int i, const SystemParams& params);
LatticeOperator Xi(int i, Sign sign, const SystemParams& params);
LatticeOperator Lplus(int i, const SystemParams& params);
LatticeOperator Lminus(int i, const SystemParams& params);
LatticeOperator Lpm(int i, Sign sign, const SystemParams& params);
LatticeOperator P(int i, Sign sign, const SystemParams& params, PConvention conv);
}  // namespace ops

enum class Identity { bracket_minus, bracket_plus, bracket_pm, cubic, cross_commute };
std::string to_string(Identity id);
std::vector<Identity> all_identities();

struct IdentityConventions {
  PConvention p = PConvention::printed;
  TripleConvention triple = TripleConvention::full;
};

struct NamedResidual {
  std::string name;
  LatticeVector residual;
};

// LHS − RHS of the printed relation at a state; each residual empty iff it holds there.
std::vector<NamedResidual> check_identity(int i, Identity which, const SystemParams& params,
                                          const QuantumState& state,
                                          IdentityConventions conv = {});

// The exact relations found by evaluating both sides on the lattice; they carry powers of
// κ = k_{i−1} that the printed forms lack. Diagnostics only.
std::vector<NamedResidual> check_identity_derived(int i, Identity which,
                                                  const SystemParams& params,
                                                  const QuantumState& state);

// Smallest margin keeping every lowering chain used by the identities on the lattice.
long interior_margin(const SystemParams& params);
bool is_interior(const SystemParams& params, const QuantumState& s);

struct SingularDivisor : std::domain_error {
  using std::domain_error::domain_error;
};

// M₁⁻ as printed (divisors evaluated at the source state) with the printed S₁.
LatticeOperator M1_minus(const SystemParams& params);
// The Ξ-label reading, for which [L1, M] = L1⁻ holds exactly.
LatticeOperator M1_minus_xi_reading(const SystemParams& params);
LatticeVector M1_minus_action(const SystemParams& params, const QuantumState& state);
std::vector<NamedResidual> check_M1(const LatticeOperator& m, const SystemParams& params,
                                    const QuantumState& state);

struct IndependenceReport {
  std::size_t window_states = 0;
  int operator_rank = 0;      // rank of the 7 window matrices as vectors
  int monomial_count = 0;
  int monomial_rank = 0;      // degree ≤ 2 monomials in the diagonal eigenvalues
  bool pass = false;
};

IndependenceReport independence_smoke_test(const SystemParams& params, long nmax);

// Rank of a list of sparse rational vectors (exact elimination).
int exact_rank(const std::vector<std::map<std::size_t, Rational>>& rows);

}  // namespace ttw4d
