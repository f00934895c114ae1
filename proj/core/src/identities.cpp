#include "ttw4d/lattice.hpp"

namespace ttw4d {

std::string to_string(Identity id) {
  switch (id) {
    case Identity::bracket_minus: return "bracket-minus";
    case Identity::bracket_plus: return "bracket-plus";
    case Identity::bracket_pm: return "bracket-pm";
    case Identity::cubic: return "cubic";
    case Identity::cross_commute: return "cross-commute";
  }
  return "?";
}

std::vector<Identity> all_identities() {
  return {Identity::bracket_minus, Identity::bracket_plus, Identity::bracket_pm, Identity::cubic,
          Identity::cross_commute};
}

namespace {

OmegaPoly c(const Rational& x) { return OmegaPoly(x); }

struct Family {
  LatticeOperator L, Lp, Lm;
  Rational k, q, alpha, kappa;
};

Family family(int i, const SystemParams& P) {
  return {ops::L(i, P), ops::Lplus(i, P), ops::Lminus(i, P), P.k(i),
          Rational(P.q(i)),  SystemParams::alpha(i), P.kappa(i)};
}

std::vector<NamedResidual> cross_commute(int i, const SystemParams& P, const QuantumState& s) {
  std::vector<NamedResidual> out;
  const std::string si = std::to_string(i);
  for (int j = 0; j <= 3; ++j) {
    if (j == i) continue;
    const std::string lj = j == 0 ? "H" : "L" + std::to_string(j);
    for (Sign sg : {Sign::plus, Sign::minus}) {
      out.push_back({"[" + lj + ",L" + si + to_string(sg) + "]",
                     commutator(ops::L(j, P), ops::Lpm(i, sg, P))(s)});
    }
  }
  for (int j = 1; j <= 3; ++j) {
    if (std::abs(i - j) <= 1) continue;
    for (Sign sj : {Sign::plus, Sign::minus})
      for (Sign sg : {Sign::plus, Sign::minus})
        out.push_back({"[L" + std::to_string(j) + to_string(sj) + ",L" + si + to_string(sg) + "]",
                       commutator(ops::Lpm(j, sj, P), ops::Lpm(i, sg, P))(s)});
  }
  return out;
}

LatticeOperator triple(const Family& f, TripleConvention t) {
  return t == TripleConvention::full ? sym_triple(f.L, f.Lm, f.Lm) : cyclic_triple(f.L, f.Lm, f.Lm);
}

}  // namespace

std::vector<NamedResidual> check_identity(int i, Identity which, const SystemParams& P,
                                          const QuantumState& s, IdentityConventions conv) {
  if (which == Identity::cross_commute) return cross_commute(i, P, s);
  const Family f = family(i, P);
  const Rational k2 = f.k * f.k;
  const Rational& q = f.q;
  switch (which) {
    case Identity::bracket_minus: {
      LatticeOperator rhs = f.Lm.scaled(c(-4 * k2 * q * q)) + f.Lp.scaled(c(-4 * f.alpha * k2 * q));
      return {{"[L,L-]", (commutator(f.L, f.Lm) - rhs)(s)}};
    }
    case Identity::bracket_plus: {
      LatticeOperator rhs = anticommutator(f.L, f.Lm).scaled(c(2 * q)) +
                            f.Lp.scaled(c(-4 * k2 * q)) + f.Lm.scaled(c(4 * k2 * q * q)) +
                            f.Lm.scaled(c(8 * q * q * q * k2));
      return {{"[L,L+]", (commutator(f.L, f.Lp) - rhs)(s)}};
    }
    case Identity::bracket_pm: {
      LatticeOperator rhs = (f.Lm * f.Lm).scaled(c(2 * q)) -
                            ops::P(i, Sign::minus, P, conv.p).scaled(c(2));
      return {{"[L+,L-]", (commutator(f.Lp, f.Lm) - rhs)(s)}};
    }
    case Identity::cubic: {
      LatticeOperator lhs = triple(f, conv.triple) +
                            (f.Lm * f.Lm).scaled(c(2 * k2 * (14 * q * q - 3 * f.alpha))) +
                            (f.Lp * f.Lp).scaled(c(6 * k2)) +
                            anticommutator(f.Lp, f.Lm).scaled(c(6 * k2 * q)) -
                            ops::P(i, Sign::plus, P, conv.p).scaled(c(12 * k2)) +
                            ops::P(i, Sign::minus, P, conv.p).scaled(c(4 * k2 * q));
      return {{"cubic", lhs(s)}};
    }
    default: break;
  }
  return {};
}

std::vector<NamedResidual> check_identity_derived(int i, Identity which, const SystemParams& P,
                                                  const QuantumState& s) {
  if (which == Identity::cross_commute) return cross_commute(i, P, s);
  const Family f = family(i, P);
  const Rational k2 = f.k * f.k;
  const Rational& q = f.q;
  const Rational& K = f.kappa;
  switch (which) {
    case Identity::bracket_minus: {
      LatticeOperator rhs = f.Lm.scaled(c(-4 * k2 * q * q)) + f.Lp.scaled(c(-4 * K * k2 * q));
      return {{"[L,L-] derived", (commutator(f.L, f.Lm) - rhs)(s)}};
    }
    case Identity::bracket_plus: {
      LatticeOperator rhs = anticommutator(f.L, f.Lm).scaled(c(2 * q / K)) +
                            f.Lp.scaled(c(4 * k2 * q * q)) +
                            f.Lm.scaled(c((8 * k2 * q * q * q - 4 * f.alpha * k2 * q) / K));
      return {{"[L,L+] derived", (commutator(f.L, f.Lp) - rhs)(s)}};
    }
    case Identity::bracket_pm: {
      LatticeOperator rhs = (f.Lm * f.Lm).scaled(c(2 * q / K)) -
                            ops::P(i, Sign::minus, P, PConvention::antisymmetric).scaled(c(2));
      return {{"[L+,L-] derived", (commutator(f.Lp, f.Lm) - rhs)(s)}};
    }
    case Identity::cubic: {
      LatticeOperator lhs =
          sym_triple(f.L, f.Lm, f.Lm) +
          (f.Lm * f.Lm).scaled(c(2 * k2 * (14 * q * q - 3 * f.alpha))) +
          (f.Lp * f.Lp).scaled(c(6 * k2 * K * K)) +
          anticommutator(f.Lp, f.Lm).scaled(c(6 * k2 * q * K)) -
          ops::P(i, Sign::plus, P, PConvention::printed).scaled(c(12 * k2 * K * K)) +
          ops::P(i, Sign::minus, P, PConvention::antisymmetric_reversed).scaled(c(4 * k2 * q * K));
      return {{"cubic derived", lhs(s)}};
    }
    default: break;
  }
  return {};
}

namespace {

void require_211(const SystemParams& P) {
  if (P.k(1) != Rational(2) || P.k(2) != Rational(1) || P.k(3) != Rational(1))
    throw std::invalid_argument("M1- is implemented for k=(2,1,1) only");
}

struct M1Divisors {
  Rational A0, p, q;
  OmegaPoly S1;
};

M1Divisors m1_divisors(const SystemParams& P, const QuantumState& s) {
  const SpectralData d = spectral_chain(P, s);
  const Rational p(P.p(1));
  if (d.A0.is_zero() || d.A0 == p || d.A0 == -p)
    throw SingularDivisor("M1-: A0 in {0, +-p1} at " + s.str());
  const OmegaPoly w = OmegaPoly::omega();
  const OmegaPoly S1 = (d.E * d.E - w * Rational(4)) *
                       (d.A1 * d.A1 - P.a(1) * P.a(1)) * Rational(-1, 16);
  return {d.A0, p, Rational(P.q(1)), S1};
}

LatticeOperator m1_from(const SystemParams& P, const LatticeOperator& first,
                        const LatticeOperator& second, std::string name) {
  require_211(P);
  return LatticeOperator(std::move(name), [P, first, second](const QuantumState& s) {
    const M1Divisors m = m1_divisors(P, s);
    LatticeVector a = first(s);
    a /= m.A0 * (m.A0 + m.p);
    LatticeVector b = second(s);
    b /= m.A0 * (m.A0 - m.p);
    LatticeVector v = (a + b) * OmegaPoly(Rational(-1) / (4 * m.q));
    v.add(s, m.S1 / (m.A0 * m.A0 - m.p * m.p));
    return v;
  });
}

}  // namespace

LatticeOperator M1_minus(const SystemParams& P) {
  return m1_from(P, ops::Lminus(1, P), ops::Lplus(1, P), "M1-");
}

LatticeOperator M1_minus_xi_reading(const SystemParams& P) {
  return m1_from(P, ops::Xi(1, Sign::plus, P), ops::Xi(1, Sign::minus, P), "M1-(Xi reading)");
}

LatticeVector M1_minus_action(const SystemParams& P, const QuantumState& s) {
  return M1_minus(P)(s);
}

std::vector<NamedResidual> check_M1(const LatticeOperator& m, const SystemParams& P,
                                    const QuantumState& s) {
  std::vector<NamedResidual> out;
  out.push_back({"[L1,M1-] - L1-", (commutator(ops::L(1, P), m) - ops::Lminus(1, P))(s)});
  out.push_back({"[H,M1-]", commutator(ops::H(P), m)(s)});
  out.push_back({"[L2,M1-]", commutator(ops::L(2, P), m)(s)});
  out.push_back({"[L3,M1-]", commutator(ops::L(3, P), m)(s)});
  return out;
}

int exact_rank(const std::vector<std::map<std::size_t, Rational>>& rows) {
  std::map<std::size_t, std::map<std::size_t, Rational>> pivots;
  for (auto r : rows) {
    while (!r.empty()) {
      auto it = pivots.find(r.begin()->first);
      if (it == pivots.end()) break;
      const Rational f = r.begin()->second;
      for (const auto& [col, v] : it->second) {
        Rational& x = r[col];
        x -= f * v;
        if (x.is_zero()) r.erase(col);
      }
    }
    if (r.empty()) continue;
    const Rational lead = r.begin()->second;
    for (auto& [col, v] : r) v /= lead;
    pivots.emplace(r.begin()->first, std::move(r));
  }
  return static_cast<int>(pivots.size());
}

IndependenceReport independence_smoke_test(const SystemParams& P, long nmax) {
  const std::vector<QuantumState> window = enumerate_states(nmax);
  std::map<QuantumState, std::size_t> index;
  for (std::size_t j = 0; j < window.size(); ++j) index[window[j]] = j;
  const std::size_t W = window.size();
  constexpr std::size_t kPowers = 8;

  const std::vector<LatticeOperator> seven = {ops::H(P),        ops::L(1, P), ops::Lplus(1, P),
                                              ops::L(2, P),     ops::Lplus(2, P), ops::L(3, P),
                                              ops::Lplus(3, P)};
  std::vector<std::map<std::size_t, Rational>> rows;
  for (const auto& op : seven) {
    std::map<std::size_t, Rational> row;
    for (std::size_t col = 0; col < W; ++col) {
      for (const auto& [t, coeff] : op(window[col])) {
        auto it = index.find(t);
        if (it == index.end()) continue;
        for (std::size_t pw = 0; pw < coeff.coefficients().size(); ++pw) {
          const Rational& x = coeff.coefficients()[pw];
          if (!x.is_zero()) row[(it->second * W + col) * kPowers + pw] = x;
        }
      }
    }
    rows.push_back(std::move(row));
  }

  // Degree ≤ 2 monomials in (E, ℓ1, ℓ2, ℓ3), evaluated over the window.
  std::vector<std::vector<OmegaPoly>> values(window.size());
  for (std::size_t j = 0; j < W; ++j) {
    const SpectralData d = spectral_chain(P, window[j]);
    values[j] = {OmegaPoly(Rational(1)), d.E, OmegaPoly(d.ell1), OmegaPoly(d.ell2),
                 OmegaPoly(d.ell3)};
  }
  std::vector<std::map<std::size_t, Rational>> mono;
  for (int u = 0; u < 5; ++u)
    for (int v = u; v < 5; ++v) {
      std::map<std::size_t, Rational> row;
      for (std::size_t j = 0; j < W; ++j) {
        const OmegaPoly m = values[j][u] * values[j][v];
        for (std::size_t pw = 0; pw < m.coefficients().size(); ++pw)
          if (!m.coefficients()[pw].is_zero()) row[j * kPowers + pw] = m.coefficients()[pw];
      }
      mono.push_back(std::move(row));
    }

  IndependenceReport rep;
  rep.window_states = W;
  rep.operator_rank = exact_rank(rows);
  rep.monomial_count = static_cast<int>(mono.size());
  rep.monomial_rank = exact_rank(mono);
  rep.pass = rep.operator_rank == static_cast<int>(seven.size()) &&
             rep.monomial_rank == rep.monomial_count;
  return rep;
}

}  // namespace ttw4d
