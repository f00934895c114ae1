#include "ttw4d/lattice.hpp"

#include <mutex>
#include <optional>
#include <sstream>
#include <unordered_map>

namespace ttw4d {

LatticeVector LatticeVector::single(const QuantumState& s, const OmegaPoly& c) {
  LatticeVector v;
  v.add(s, c);
  return v;
}

void LatticeVector::add(const QuantumState& s, const OmegaPoly& c) {
  if (!s.on_lattice() || c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(s, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

OmegaPoly LatticeVector::coefficient(const QuantumState& s) const {
  auto it = terms_.find(s);
  return it == terms_.end() ? OmegaPoly() : it->second;
}

LatticeVector& LatticeVector::operator+=(const LatticeVector& o) {
  for (const auto& [s, c] : o.terms_) add(s, c);
  return *this;
}

LatticeVector& LatticeVector::operator-=(const LatticeVector& o) {
  for (const auto& [s, c] : o.terms_) add(s, -c);
  return *this;
}

LatticeVector& LatticeVector::operator*=(const OmegaPoly& f) {
  if (f.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [s, c] : terms_) c *= f;
  return *this;
}

LatticeVector& LatticeVector::operator/=(const Rational& d) {
  for (auto& [s, c] : terms_) c /= d;
  return *this;
}

std::string LatticeVector::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [s, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")" << s.str();
  }
  return os.str();
}

LatticeOperator::LatticeOperator(std::string name, Rule rule)
    : name_(std::move(name)), rule_(std::make_shared<const Rule>(std::move(rule))) {}

LatticeOperator LatticeOperator::diagonal(std::string name,
                                          std::function<OmegaPoly(const QuantumState&)> value) {
  return LatticeOperator(std::move(name), [value = std::move(value)](const QuantumState& s) {
    return LatticeVector::single(s, value(s));
  });
}

LatticeOperator LatticeOperator::zero() {
  return LatticeOperator("0", [](const QuantumState&) { return LatticeVector(); });
}

LatticeVector LatticeOperator::operator()(const LatticeVector& v) const {
  LatticeVector out;
  for (const auto& [s, c] : v) out += (*rule_)(s) * c;
  return out;
}

LatticeOperator LatticeOperator::scaled(const OmegaPoly& f) const {
  auto r = rule_;
  return LatticeOperator("(" + f.str() + ")" + name_,
                         [r, f](const QuantumState& s) { return (*r)(s) * f; });
}

LatticeOperator LatticeOperator::renamed(std::string name) const {
  LatticeOperator op = *this;
  op.name_ = std::move(name);
  return op;
}

LatticeOperator operator+(const LatticeOperator& a, const LatticeOperator& b) {
  auto ra = a.rule_, rb = b.rule_;
  return LatticeOperator(a.name_ + " + " + b.name_,
                         [ra, rb](const QuantumState& s) { return (*ra)(s) + (*rb)(s); });
}

LatticeOperator operator-(const LatticeOperator& a, const LatticeOperator& b) {
  auto ra = a.rule_, rb = b.rule_;
  return LatticeOperator(a.name_ + " - " + b.name_,
                         [ra, rb](const QuantumState& s) { return (*ra)(s) - (*rb)(s); });
}

LatticeOperator operator*(const LatticeOperator& a, const LatticeOperator& b) {
  auto rb = b.rule_;
  LatticeOperator outer = a;
  return LatticeOperator(a.name_ + " " + b.name_, [rb, outer](const QuantumState& s) {
    return outer((*rb)(s));
  });
}

LatticeOperator commutator(const LatticeOperator& a, const LatticeOperator& b) {
  return (a * b - b * a).renamed("[" + a.name() + ", " + b.name() + "]");
}

LatticeOperator anticommutator(const LatticeOperator& a, const LatticeOperator& b) {
  return (a * b + b * a).renamed("{" + a.name() + ", " + b.name() + "}");
}

LatticeOperator sym_triple(const LatticeOperator& a, const LatticeOperator& b,
                           const LatticeOperator& c) {
  return (a * b * c + a * c * b + b * a * c + b * c * a + c * a * b + c * b * a)
      .renamed("{" + a.name() + ", " + b.name() + ", " + c.name() + "}");
}

LatticeOperator cyclic_triple(const LatticeOperator& a, const LatticeOperator& b,
                              const LatticeOperator& c) {
  return (a * b * c + b * c * a + c * a * b)
      .renamed("{" + a.name() + ", " + b.name() + ", " + c.name() + "}_cyc");
}

LatticeVector ladder_action(LadderKind kind, int slot, const SystemParams& P,
                            const QuantumState& s) {
  if (slot < 0 || slot > 3) throw std::invalid_argument("ladder slot must be 0..3");
  const SpectralData d = spectral_chain(P, s);
  const FactorState f{s[slot], slot == 3 ? P.a(3) : d.A(slot)};
  const OmegaPoly c = ladder_coefficient(kind, P, slot, f);
  QuantumState t = s;
  t[slot] = ladder_target(kind, f).n;
  return LatticeVector::single(t, c);
}

namespace {

// Ξ images are recomputed many times inside composed identities; memoize them per parameter set.
class XiCache {
 public:
  std::optional<LatticeVector> find(const std::string& key) {
    std::lock_guard lock(mutex_);
    const auto it = map_.find(key);
    if (it == map_.end()) return std::nullopt;
    return it->second;
  }
  void store(std::string key, const LatticeVector& v) {
    std::lock_guard lock(mutex_);
    if (map_.size() > kMaxEntries) map_.clear();
    map_.emplace(std::move(key), v);
  }

 private:
  static constexpr std::size_t kMaxEntries = 1 << 20;
  std::mutex mutex_;
  std::unordered_map<std::string, LatticeVector> map_;
};

XiCache& xi_cache() {
  static XiCache cache;
  return cache;
}

}  // namespace

LatticeVector xi_action(int i, Sign sign, const SystemParams& P, const QuantumState& s) {
  std::string key = P.k_str() + ";" + P.a_str() + ";" + std::to_string(i) + to_string(sign) + s.str();
  if (auto hit = xi_cache().find(key)) return *hit;
  const XiPlan plan = xi_plan(P, i, sign, s);
  LatticeVector v;
  if (!plan.dropped) v = LatticeVector::single(plan.target, plan.coefficient);
  xi_cache().store(std::move(key), v);
  return v;
}

LatticeVector Lpm_action(int i, Sign sign, const SystemParams& P, const QuantumState& s) {
  LatticeVector plus = xi_action(i, Sign::plus, P, s);
  LatticeVector minus = xi_action(i, Sign::minus, P, s);
  if (sign == Sign::plus) return plus + minus;
  const Rational A = spectral_chain(P, s).A(i - 1);
  if (A.is_zero()) throw std::domain_error("L- divisor vanishes");
  LatticeVector v = plus - minus;
  v *= OmegaPoly(P.k(i));
  v /= A;
  return v;
}

std::string to_string(PConvention c) {
  switch (c) {
    case PConvention::printed: return "printed";
    case PConvention::antisymmetric: return "antisymmetric";
    case PConvention::antisymmetric_reversed: return "antisymmetric-reversed";
  }
  return "?";
}

PConvention parse_p_convention(const std::string& t) {
  if (t == "printed") return PConvention::printed;
  if (t == "antisymmetric") return PConvention::antisymmetric;
  if (t == "antisymmetric-reversed") return PConvention::antisymmetric_reversed;
  throw std::invalid_argument("unknown P(-) convention: " + t);
}

std::vector<PConvention> all_p_conventions() {
  return {PConvention::printed, PConvention::antisymmetric, PConvention::antisymmetric_reversed};
}

std::string to_string(TripleConvention c) { return c == TripleConvention::full ? "full" : "cyclic"; }

namespace ops {

LatticeOperator H(const SystemParams& P) {
  return LatticeOperator::diagonal("H", [P](const QuantumState& s) { return spectral_chain(P, s).E; });
}

LatticeOperator L(int i, const SystemParams& P) {
  if (i == 0) return H(P);
  if (i < 1 || i > 3) throw std::out_of_range("L index");
  return LatticeOperator::diagonal("L" + std::to_string(i), [P, i](const QuantumState& s) {
    return OmegaPoly(spectral_chain(P, s).ell(i));
  });
}

LatticeOperator Xi(int i, Sign sign, const SystemParams& P) {
  return LatticeOperator("Xi" + std::to_string(i) + to_string(sign),
                         [P, i, sign](const QuantumState& s) { return xi_action(i, sign, P, s); });
}

LatticeOperator Lpm(int i, Sign sign, const SystemParams& P) {
  return LatticeOperator("L" + std::to_string(i) + to_string(sign),
                         [P, i, sign](const QuantumState& s) { return Lpm_action(i, sign, P, s); });
}

LatticeOperator Lplus(int i, const SystemParams& P) { return Lpm(i, Sign::plus, P); }
LatticeOperator Lminus(int i, const SystemParams& P) { return Lpm(i, Sign::minus, P); }

LatticeOperator P(int i, Sign sign, const SystemParams& params, PConvention conv) {
  const std::string name = std::string("P") + std::to_string(i) + (sign == Sign::plus ? "(+)" : "(-)");
  return LatticeOperator(name, [params, i, sign, conv](const QuantumState& s) {
    return P_action(i, sign, params, s, conv);
  });
}

}  // namespace ops

LatticeVector P_action(int i, Sign sign, const SystemParams& P, const QuantumState& s,
                       PConvention conv) {
  const LatticeOperator xp = ops::Xi(i, Sign::plus, P), xm = ops::Xi(i, Sign::minus, P);
  const LatticeVector mp = xm(xp(s));  // Ξ⁻Ξ⁺
  const LatticeVector pm = xp(xm(s));  // Ξ⁺Ξ⁻
  if (sign == Sign::plus) return mp + pm;
  LatticeVector v;
  switch (conv) {
    case PConvention::printed: v = pm + mp; break;
    case PConvention::antisymmetric: v = pm - mp; break;
    case PConvention::antisymmetric_reversed: v = mp - pm; break;
  }
  const Rational A = spectral_chain(P, s).A(i - 1);
  v *= OmegaPoly(P.k(i));
  v /= A;
  return v;
}

long interior_margin(const SystemParams& P) {
  long m = 0;
  for (int i = 1; i <= 3; ++i) m = std::max({m, P.p(i), P.q(i)});
  return 2 * m;
}

bool is_interior(const SystemParams& P, const QuantumState& s) {
  const long m = interior_margin(P);
  return s[0] >= m && s[1] >= m && s[2] >= m && s[3] >= m;
}

}  // namespace ttw4d
