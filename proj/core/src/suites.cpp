#include "ttw4d/suites.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <mutex>
#include <numbers>
#include <sstream>
#include <thread>

#include "ttw4d/diffops.hpp"
#include "ttw4d/geometry.hpp"
#include "ttw4d/ladder_steps.hpp"
#include "ttw4d/sampling.hpp"

namespace ttw4d {

std::string to_string(SuiteId id) {
  switch (id) {
    case SuiteId::eigen: return "eigen";
    case SuiteId::ladders: return "ladders";
    case SuiteId::xi: return "xi";
    case SuiteId::algebra: return "algebra";
    case SuiteId::m1: return "m1";
    case SuiteId::curvature: return "curvature";
    case SuiteId::conformal: return "conformal";
    case SuiteId::example211: return "example211";
    case SuiteId::all: return "all";
  }
  return "?";
}

SuiteId parse_suite(const std::string& text) {
  for (SuiteId id : concrete_suites())
    if (to_string(id) == text) return id;
  if (text == "all") return SuiteId::all;
  throw std::invalid_argument("unknown suite: " + text);
}

std::vector<SuiteId> concrete_suites() {
  return {SuiteId::eigen,     SuiteId::ladders,   SuiteId::xi,        SuiteId::algebra,
          SuiteId::m1,        SuiteId::curvature, SuiteId::conformal, SuiteId::example211};
}

void SuiteReport::finalize() {
  max_residual = 0;
  pass = true;
  for (const auto& c : cases) {
    if (c.diagnostic) continue;
    max_residual = std::max(max_residual, c.residual);
    pass = pass && c.pass;
  }
}

double exact_norm(const LatticeVector& v) {
  double m = 0;
  for (const auto& [s, c] : v)
    for (const auto& q : c.coefficients()) m = std::max(m, std::abs(q.to_double()));
  return m;
}

namespace {

double poly_norm(const OmegaPoly& p) {
  double m = 0;
  for (const auto& q : p.coefficients()) m = std::max(m, std::abs(q.to_double()));
  return m;
}

double relative(double residual, double scale) {
  return scale > 0 ? std::abs(residual) / scale : std::abs(residual);
}

}  // namespace

void parallel_for(std::size_t count, std::size_t threads,
                  const std::function<void(std::size_t)>& fn) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min(threads, count);
  if (threads <= 1) {
    for (std::size_t j = 0; j < count; ++j) fn(j);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < threads; ++t)
    pool.emplace_back([&] {
      for (std::size_t j = next++; j < count; j = next++) {
        try {
          fn(j);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      }
    });
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

bool is_k211(const SystemParams& P) {
  return P.k(1) == Rational(2) && P.k(2) == Rational(1) && P.k(3) == Rational(1);
}

std::vector<SystemParams> default_grid() {
  std::vector<SystemParams> out;
  for (const char* k : {"1,1,1", "2,1,1", "3/2,3/2,1", "2,1,2"})
    for (const char* a : {"1/2,1/2,1/2,1/2", "1/3,2/5,3/7,1/2"})
      out.push_back(SystemParams::parse(k, a, "1"));
  return out;
}

namespace {

SystemParams numeric(const SystemParams& P) {
  return P.formal() ? P.with_omega(Rational(1)) : P;
}

std::vector<QuantumState> box(long lo, long hi) {
  std::vector<QuantumState> out;
  for (long a = lo; a <= hi; ++a)
    for (long b = lo; b <= hi; ++b)
      for (long c = lo; c <= hi; ++c)
        for (long d = lo; d <= hi; ++d) out.push_back(QuantumState{{a, b, c, d}});
  return out;
}


}  // namespace

std::vector<QuantumState> interior_window(const SystemParams& P) {
  const long m = interior_margin(P);
  return box(m, m + 2);
}

namespace {

template <class Fn>
std::vector<CaseRecord> map_cases(std::size_t count, std::size_t threads, Fn&& fn) {
  std::vector<std::vector<CaseRecord>> parts(count);
  parallel_for(count, threads, [&](std::size_t j) { parts[j] = fn(j); });
  std::vector<CaseRecord> out;
  for (auto& p : parts)
    for (auto& c : p) out.push_back(std::move(c));
  return out;
}

// Worst point of a pointwise check.
struct Worst {
  double value = -1;
  std::string point;

  void take(double v, const Point& p) {
    if (v > value || std::isnan(v)) {
      value = std::isnan(v) ? INFINITY : v;
      point = p.str();
    }
  }
};

CaseRecord pointwise(std::string identity, const QuantumState* s, const Worst& w, double tol) {
  CaseRecord c;
  c.identity = std::move(identity);
  c.state = s ? s->str() : "";
  c.point = w.point;
  c.residual = std::max(w.value, 0.0);
  c.pass = w.value <= tol;
  return c;
}

CaseRecord exact_case(std::string identity, std::string state, double residual,
                      std::string conventions = "", bool diagnostic = false) {
  CaseRecord c;
  c.identity = std::move(identity);
  c.state = std::move(state);
  c.residual = residual;
  c.pass = residual == 0;
  c.conventions = std::move(conventions);
  c.diagnostic = diagnostic;
  return c;
}

// ---- eigen ----

std::vector<CaseRecord> eigen_suite(const SuiteConfig& cfg, const SystemParams& P) {
  const Tower tower = build_tower(P);
  const auto points = sample_cell_points(P, cfg.points, cfg.seed);
  const auto states = enumerate_states(cfg.nmax);
  const real w = P.omega().to_real();
  return map_cases(states.size(), cfg.threads, [&](std::size_t j) {
    const QuantumState& s = states[j];
    const Wavefunction psi(P, s);
    const auto& sd = psi.spectral();
    const std::array<real, 4> values{sd.E.eval(w), sd.ell1.to_real(), sd.ell2.to_real(),
                                     sd.ell3.to_real()};
    std::array<Worst, 4> worst;
    for (const auto& p : points) {
      const Jet f = psi(p, 2);
      for (int i = 0; i < 4; ++i) {
        const Applied a = tower.L(i).apply_with_scale(f);
        const real rhs = values[i] * f.value();
        worst[i].take(relative(a.value.value() - rhs, a.scale + std::abs(rhs)), p);
      }
    }
    std::vector<CaseRecord> out;
    const char* names[] = {"H", "L1", "L2", "L3"};
    for (int i = 0; i < 4; ++i)
      out.push_back(pointwise(std::string(names[i]) + " eigen", &s, worst[i], cfg.tol.eigen));
    return out;
  });
}

// ---- ladders ----

std::vector<CaseRecord> ladder_suite(const SuiteConfig& cfg, const SystemParams& P) {
  const auto points = sample_cell_points(P, cfg.points, cfg.seed);
  const auto states = box(1, std::clamp(cfg.nmax, 1L, 4L));
  const real w = P.omega().to_real();
  return map_cases(states.size(), cfg.threads, [&](std::size_t j) {
    const QuantumState& s = states[j];
    const SpectralData sd = spectral_chain(P, s);
    std::vector<CaseRecord> out;
    for (int slot = 0; slot <= 3; ++slot) {
      std::vector<LadderKind> kinds;
      if (slot == 0)
        kinds = {LadderKind::k0_plus, LadderKind::k0_minus};
      else
        kinds = {LadderKind::j_plus, LadderKind::j_minus, LadderKind::ka_plus,
                 LadderKind::ka_minus};
      const Rational a = slot == 0 ? sd.A0 : slot_gauge(P, s, slot).a;
      for (LadderKind kind : kinds) {
        LadderStep st{kind, slot, FactorState{s[slot], a}, {}, {}};
        st.to = ladder_target(kind, st.from);
        st.coefficient = ladder_coefficient(kind, P, slot, st.from);
        const DiffOperator op = ladder_operator(P, st);
        const real coef = st.coefficient.eval(w);
        Worst worst;
        for (const auto& p : points) {
          const Applied lhs = op.apply_with_scale(factor_function(P, slot, st.from, p, 1));
          const real rhs = coef * factor_function(P, slot, st.to, p, 0).value();
          worst.take(relative(lhs.value.value() - rhs, lhs.scale + std::abs(rhs)), p);
        }
        out.push_back(pointwise(to_string(kind) + " slot " + std::to_string(slot), &s, worst,
                                cfg.tol.ladder));
      }
    }
    return out;
  });
}

// ---- xi ----

std::vector<CaseRecord> xi_suite(const SuiteConfig& cfg, const SystemParams& P) {
  std::vector<CaseRecord> out;
  const auto states = enumerate_states(cfg.nmax);
  // Energy is unchanged by every Ξ image.
  for (int i = 1; i <= 3; ++i)
    for (Sign sign : {Sign::plus, Sign::minus}) {
      std::vector<double> res(states.size(), 0);
      std::vector<std::string> bad(states.size());
      parallel_for(states.size(), cfg.threads, [&](std::size_t j) {
        const OmegaPoly E = spectral_chain(P, states[j]).E;
        for (const auto& [t, c] : xi_action(i, sign, P, states[j])) {
          const double d = poly_norm(spectral_chain(P, t).E - E);
          if (d > res[j]) {
            res[j] = d;
            bad[j] = states[j].str() + "->" + t.str();
          }
        }
      });
      const auto it = std::max_element(res.begin(), res.end());
      const std::size_t at = static_cast<std::size_t>(it - res.begin());
      out.push_back(exact_case("xi" + std::to_string(i) + to_string(sign) + " energy",
                               *it > 0 ? bad[at] : "n<=" + std::to_string(cfg.nmax), *it));
    }
  // Composed primitive ladders against the closed-form Ξ1 coefficients.
  const long m = interior_margin(P);
  std::vector<QuantumState> interior;
  for (const auto& s : states)
    if (s[0] >= m && s[1] >= m && s[2] >= m && s[3] >= m) interior.push_back(s);
  for (Sign sign : {Sign::plus, Sign::minus}) {
    double worst = 0, worst_falling = 0;
    std::string where, where_falling;
    for (const auto& s : interior) {
      const XiPlan plan = xi_plan(P, 1, sign, s);
      if (plan.dropped) continue;
      const double d = poly_norm(plan.coefficient - xi1_closed_form(P, sign, s));
      if (d > worst) worst = d, where = s.str();
      if (sign == Sign::minus) {
        const double f = poly_norm(plan.coefficient - xi1_minus_falling_form(P, s));
        if (f > worst_falling) worst_falling = f, where_falling = s.str();
      }
    }
    if (interior.empty()) continue;
    out.push_back(exact_case("xi1" + to_string(sign) + " closed form", where, worst));
    if (sign == Sign::minus)
      out.push_back(exact_case("xi1- falling-factorial reading", where_falling, worst_falling, "",
                               true));
  }
  return out;
}

// ---- algebra ----

struct ConventionTry {
  IdentityConventions conv;
  std::string label;
};

std::vector<ConventionTry> convention_tries(Identity id, const std::optional<PConvention>& fixed) {
  std::vector<PConvention> ps =
      fixed ? std::vector<PConvention>{*fixed} : all_p_conventions();
  std::vector<ConventionTry> out;
  const bool uses_p = id == Identity::bracket_pm || id == Identity::cubic;
  if (!uses_p) return {{IdentityConventions{}, ""}};
  for (PConvention p : ps)
    for (TripleConvention t : {TripleConvention::full, TripleConvention::cyclic}) {
      if (id != Identity::cubic && t == TripleConvention::cyclic) continue;
      std::string label = "P-=" + to_string(p);
      if (id == Identity::cubic) label += ",triple=" + to_string(t);
      out.push_back({IdentityConventions{p, t}, label});
    }
  return out;
}

struct Sweep {
  double worst = 0;
  std::string where;
  std::string detail;
};

template <class Check>
Sweep sweep(const std::vector<QuantumState>& states, std::size_t threads, Check&& check) {
  std::vector<std::vector<NamedResidual>> res(states.size());
  parallel_for(states.size(), threads, [&](std::size_t j) { res[j] = check(states[j]); });
  Sweep s;
  for (std::size_t j = 0; j < states.size(); ++j)
    for (const auto& r : res[j]) {
      const double n = exact_norm(r.residual);
      if (n > s.worst) {
        s.worst = n;
        s.where = states[j].str();
        s.detail = r.name;
      }
    }
  return s;
}

std::vector<CaseRecord> algebra_suite(const SuiteConfig& cfg, const SystemParams& P,
                                      std::vector<std::string>& conventions) {
  std::vector<CaseRecord> out;
  const auto states = interior_window(P);
  for (int i = 1; i <= 3; ++i) {
    for (Identity id : all_identities()) {
      const std::string name = "i=" + std::to_string(i) + " " + to_string(id);
      if (id == Identity::cross_commute) {
        const Sweep s = sweep(states, cfg.threads,
                              [&](const QuantumState& q) { return check_identity(i, id, P, q); });
        out.push_back(exact_case(name, s.where, s.worst, s.detail));
        continue;
      }
      std::optional<CaseRecord> chosen, first;
      for (const auto& t : convention_tries(id, cfg.convention)) {
        const Sweep s = sweep(states, cfg.threads, [&](const QuantumState& q) {
          return check_identity(i, id, P, q, t.conv);
        });
        CaseRecord c = exact_case(name, s.where, s.worst, t.label);
        if (!first) first = c;
        if (c.pass && !chosen) chosen = c;
        c.diagnostic = true;
        c.identity += " [tried]";
        out.push_back(c);
      }
      const CaseRecord main = chosen ? *chosen : *first;
      if (chosen && !main.conventions.empty())
        conventions.push_back(name + ": " + main.conventions);
      out.push_back(main);
      const Sweep d = sweep(states, cfg.threads, [&](const QuantumState& q) {
        return check_identity_derived(i, id, P, q);
      });
      out.push_back(exact_case(name + " derived form", d.where, d.worst, "", true));
    }
  }
  return out;
}

// ---- m1 ----

std::vector<CaseRecord> m1_suite(const SuiteConfig& cfg, const SystemParams& P) {
  if (!is_k211(P)) throw UnsupportedSuite("suite m1 requires k=(2,1,1)");
  std::vector<CaseRecord> out;
  const auto states = interior_window(P);
  auto run = [&](const LatticeOperator& op, const std::string& tag, bool diagnostic) {
    std::vector<std::vector<NamedResidual>> res(states.size());
    std::vector<char> singular(states.size(), 0);
    parallel_for(states.size(), cfg.threads, [&](std::size_t j) {
      try {
        res[j] = check_M1(op, P, states[j]);
      } catch (const SingularDivisor&) {
        singular[j] = 1;
      }
    });
    std::map<std::string, Sweep> by_name;
    std::vector<std::string> order;
    std::size_t skipped = 0;
    for (std::size_t j = 0; j < states.size(); ++j) {
      skipped += singular[j] ? 1 : 0;
      for (const auto& r : res[j]) {
        if (!by_name.count(r.name)) order.push_back(r.name);
        Sweep& s = by_name[r.name];
        const double n = exact_norm(r.residual);
        if (n > s.worst) s.worst = n, s.where = states[j].str();
      }
    }
    for (const auto& name : order)
      out.push_back(exact_case(tag + name, by_name[name].where, by_name[name].worst, "",
                               diagnostic));
    if (skipped)
      out.push_back(exact_case(tag + "singular divisors skipped", std::to_string(skipped), 0,
                               "", true));
  };
  run(M1_minus(P), "", false);
  run(M1_minus_xi_reading(P), "xi reading: ", true);
  return out;
}

// ---- curvature ----

std::vector<CaseRecord> curvature_suite(const SuiteConfig& cfg, const SystemParams& P) {
  auto points = sample_cell_points(P, cfg.points, cfg.seed);
  const bool equal_k = P.k(1) == P.k(2);
  const real k1 = P.k(1).to_real(), k2 = P.k(2).to_real();
  std::vector<CaseRecord> out(points.size() * 3);
  parallel_for(points.size(), cfg.threads, [&](std::size_t j) {
    const Point& p = points[j];
    const CurvatureReport rep = curvature_at(P, p);
    const real s2 = std::pow(std::sin(k1 * p.theta1), 2), r2 = p.r * p.r;
    const real cf = closed_form_scalar(P, p);
    const real scale = 6 / r2 + k1 * k1 * (6 / r2 + 2 / (r2 * s2)) + 2 * k2 * k2 / (r2 * s2);
    CaseRecord c;
    c.point = p.str();
    c.identity = "scalar curvature";
    c.residual = relative(rep.scalar - cf, scale);
    c.pass = c.residual <= cfg.tol.curvature;
    out[3 * j] = c;
    const real wcf = std::abs(closed_form_weyl_signed(P, p));
    c.identity = equal_k ? "weyl invariant (absolute)" : "weyl invariant";
    c.residual = equal_k ? rep.weyl_invariant : relative(rep.weyl_invariant - wcf, wcf);
    c.pass = c.residual <= (equal_k ? cfg.tol.weyl_flat : cfg.tol.curvature);
    c.conventions = k1 >= k2 ? "branch=k1>=k2" : "branch=abs";
    out[3 * j + 1] = c;
    c.identity = "tensor symmetries";
    c.residual = symmetry_bounds(rep).worst();
    c.pass = c.residual <= cfg.tol.symmetry;
    c.conventions.clear();
    out[3 * j + 2] = c;
  });
  // Probe at r = 1, sin²(k1θ1) = 1/2.
  const real quarter = std::numbers::pi_v<real> / 4;
  const Point probe{1, quarter / k1, quarter / k2, quarter / P.k(3).to_real()};
  const CurvatureReport rep = curvature_at(P, probe);
  const real r_expect = closed_form_scalar(P, probe);
  const real w_expect = std::abs(closed_form_weyl_signed(P, probe));
  CaseRecord c;
  c.point = probe.str();
  c.identity = "probe scalar curvature";
  c.residual = relative(rep.scalar - r_expect, std::max<real>(std::abs(r_expect), 1));
  c.pass = c.residual <= cfg.tol.curvature;
  out.push_back(c);
  c.identity = "probe weyl invariant";
  c.residual = relative(rep.weyl_invariant - w_expect, std::max<real>(w_expect, 1));
  c.pass = c.residual <= cfg.tol.curvature;
  out.push_back(c);
  return out;
}

// ---- conformal ----

inline constexpr std::size_t kConformalFunctions = 10;

std::vector<CaseRecord> conformal_suite(const SuiteConfig& cfg, const SystemParams& P) {
  const auto points = sample_cell_points(P, cfg.points, cfg.seed);
  const auto functions = random_test_functions(kConformalFunctions, cfg.seed ^ 0x9e3779b97f4a7c15ULL);
  const Tower tower = build_tower(P);
  const DiffOperator lb = laplace_beltrami(P);
  const Coefficient v0 = potential_v0(P);
  const real k1 = P.k(1).to_real(), k2 = P.k(2).to_real();
  return map_cases(functions.size(), cfg.threads, [&](std::size_t j) {
    const TestFunction& tf = functions[j];
    const Field f = [&tf](const Point& p, int order) { return tf(p, order); };
    Worst conf, split;
    std::string branch;
    for (const auto& p : points) {
      const ConformalCheck c = conformal_identity_check(P, p, f);
      branch = c.signed_branch ? "branch=signed" : "branch=k1>=k2";
      conf.take(c.relative, p);
      // ∇² against the tower: H − V0 − V̂1 − V̂2.
      const Jet fj = f(p, 2);
      const Applied h = tower.H.apply_with_scale(fj), l = lb.apply_with_scale(fj);
      const real s = std::pow(std::sin(k1 * p.theta1), 2), r2 = p.r * p.r;
      const real vhat = (1 - k1 * k1) / r2 + (k1 * k1 - k2 * k2) / (4 * r2 * s);
      const real pot = (v0(p, 0).value() + vhat) * fj.value();
      split.take(relative(h.value.value() - pot - l.value.value(),
                          h.scale + l.scale + std::abs(pot)),
                 p);
    }
    const std::string label = "f" + std::to_string(j);
    CaseRecord a = pointwise("conformal identity " + label, nullptr, conf, cfg.tol.conformal);
    a.conventions = branch;
    CaseRecord b = pointwise("laplace-beltrami vs tower " + label, nullptr, split, cfg.tol.conformal);
    return std::vector<CaseRecord>{a, b};
  });
}

// ---- example211 ----

inline constexpr std::size_t kExampleStates = 16;

std::vector<CaseRecord> example_suite(const SuiteConfig& cfg, const SystemParams& P) {
  if (!is_k211(P)) throw UnsupportedSuite("suite example211 requires k=(2,1,1)");
  std::vector<CaseRecord> out;
  const DiffOperator printed = build_example_L1plus(P);
  out.push_back(exact_case("maximum derivative order", std::to_string(printed.max_order()),
                           std::abs(printed.max_order() - 5)));
  const Tower tower = build_tower(P);
  const DiffOperator a0sq = compose(example_group_operator(P, ExampleGroup::A0sq),
                                    example_group_replacement(P, ExampleGroup::A0sq, tower));
  const DiffOperator flipped = printed - 2.0 * a0sq;
  const int order = printed.max_order();

  const long m = interior_margin(P);
  auto states = box(m, m + 1);
  states.resize(std::min(states.size(), kExampleStates));
  const auto points = sample_cell_points(P, cfg.points, cfg.seed);
  const real w = P.omega().to_real();
  const LatticeOperator target = ops::Xi(1, Sign::plus, P) + ops::Xi(1, Sign::minus, P);
  const LatticeOperator lminus = ops::Lminus(1, P);

  auto compare = [&](const DiffOperator& op, const LatticeOperator& lat, const QuantumState& s) {
    const LatticeVector image = lat(s);
    const Wavefunction psi(P, s);
    std::vector<std::pair<Wavefunction, real>> terms;
    for (const auto& [t, c] : image) terms.emplace_back(Wavefunction(P, t), c.eval(w));
    Worst worst;
    for (const auto& p : points) {
      const Applied lhs = op.apply_with_scale(psi(p, order));
      real rhs = 0, rscale = 0;
      for (const auto& [phi, c] : terms) {
        const real v = c * phi(p, 0).value();
        rhs += v;
        rscale += std::abs(v);
      }
      worst.take(relative(lhs.value.value() - rhs, lhs.scale + rscale), p);
    }
    return worst;
  };
  std::vector<Worst> main(states.size()), vs_l(states.size()), flip(states.size());
  parallel_for(states.size(), cfg.threads, [&](std::size_t j) {
    main[j] = compare(printed, target, states[j]);
    vs_l[j] = compare(printed, lminus, states[j]);
    flip[j] = compare(flipped, lminus, states[j]);
  });
  for (std::size_t j = 0; j < states.size(); ++j) {
    out.push_back(pointwise("printed operator vs xi1+ + xi1-", &states[j], main[j],
                            cfg.tol.example));
    CaseRecord d = pointwise("printed operator vs L1-", &states[j], vs_l[j], cfg.tol.example);
    d.diagnostic = true;
    out.push_back(d);
    d = pointwise("A0^2 group sign flipped vs L1-", &states[j], flip[j], cfg.tol.example);
    d.diagnostic = true;
    out.push_back(d);
  }
  return out;
}

}  // namespace

SuiteReport run_suite(const SuiteConfig& cfg) {
  if (cfg.suite == SuiteId::all) throw std::invalid_argument("run_suite: use run_all for 'all'");
  if (cfg.nmax < 0 || cfg.nmax > kMaxNmax)
    throw std::invalid_argument("nmax must be in [0, " + std::to_string(kMaxNmax) + "]");
  const auto start = std::chrono::steady_clock::now();
  SuiteReport rep;
  rep.suite = to_string(cfg.suite);
  rep.k = cfg.params.k_str();
  rep.a = cfg.params.a_str();
  rep.omega = cfg.params.formal() ? "formal" : cfg.params.omega().str();
  const SystemParams num = numeric(cfg.params);
  switch (cfg.suite) {
    case SuiteId::eigen: rep.cases = eigen_suite(cfg, num); break;
    case SuiteId::ladders: rep.cases = ladder_suite(cfg, num); break;
    case SuiteId::xi: rep.cases = xi_suite(cfg, cfg.params); break;
    case SuiteId::algebra:
      rep.cases = algebra_suite(cfg, cfg.params, rep.conventions);
      break;
    case SuiteId::m1: rep.cases = m1_suite(cfg, cfg.params); break;
    case SuiteId::curvature: rep.cases = curvature_suite(cfg, num); break;
    case SuiteId::conformal: rep.cases = conformal_suite(cfg, num); break;
    case SuiteId::example211: rep.cases = example_suite(cfg, num); break;
    case SuiteId::all: break;
  }
  if (cfg.convention) rep.conventions.insert(rep.conventions.begin(), "P-=" + to_string(*cfg.convention));
  rep.finalize();
  rep.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                    .count();
  return rep;
}

std::vector<SuiteReport> run_all(const SuiteConfig& cfg) {
  std::vector<SuiteReport> out;
  for (SuiteId id : concrete_suites()) {
    if ((id == SuiteId::m1 || id == SuiteId::example211) && !is_k211(cfg.params)) continue;
    SuiteConfig c = cfg;
    c.suite = id;
    out.push_back(run_suite(c));
  }
  return out;
}

std::vector<SpectrumRow> spectrum_table(const SystemParams& P, long nmax) {
  std::vector<SpectrumRow> rows;
  const auto classes = degeneracy_classes(P, nmax);
  for (std::size_t ci = 0; ci < classes.size(); ++ci)
    for (const auto& s : classes[ci].states) {
      const SpectralData sd = spectral_chain(P, s);
      rows.push_back({s, sd.A0, sd.ell1, sd.ell2, sd.ell3, sd.E, ci, classes[ci].states.size()});
    }
  return rows;
}

std::string format_spectrum(const std::vector<SpectrumRow>& rows) {
  std::ostringstream os;
  os << std::left << std::setw(16) << "state" << std::setw(12) << "A0" << std::setw(14) << "l1"
     << std::setw(14) << "l2" << std::setw(14) << "l3" << std::setw(16) << "E" << "class\n";
  for (const auto& r : rows) {
    os << std::setw(16) << r.state.str() << std::setw(12) << r.A0.str() << std::setw(14)
       << r.ell1.str() << std::setw(14) << r.ell2.str() << std::setw(14) << r.ell3.str()
       << std::setw(16) << r.E.str() << "#" << r.class_index;
    if (r.class_size > 1) os << " (x" << r.class_size << ")";
    os << "\n";
  }
  return os.str();
}

}  // namespace ttw4d
