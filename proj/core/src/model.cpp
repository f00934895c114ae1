#include "ttw4d/model.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "ttw4d/specfun.hpp"

namespace ttw4d {

std::string QuantumState::str() const {
  std::ostringstream os;
  os << "(" << n[0] << "," << n[1] << "," << n[2] << "," << n[3] << ")";
  return os.str();
}

std::vector<Rational> parse_rational_list(std::string_view text) {
  std::vector<Rational> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    const std::size_t end = comma == std::string_view::npos ? text.size() : comma;
    out.push_back(Rational::parse(text.substr(start, end - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

namespace {

long to_long(const mpz_class& z) {
  if (!z.fits_slong_p()) throw std::overflow_error("ratio component too large");
  return z.get_si();
}

}  // namespace

SystemParams::SystemParams(std::array<Rational, 3> k, std::array<Rational, 4> a,
                           std::optional<Rational> omega)
    : k_(std::move(k)), a_(std::move(a)), omega_(std::move(omega)) {
  for (const auto& ki : k_)
    if (ki.sign() <= 0) throw std::invalid_argument("k_i must be positive");
  for (const auto& ai : a_)
    if (ai.sign() <= 0) throw std::invalid_argument("a_i must be positive");
  if (omega_ && omega_->sign() <= 0) throw std::invalid_argument("omega must be positive");
  const Rational ratios[3] = {k_[0], k_[1] / k_[0], k_[2] / k_[1]};
  for (int i = 0; i < 3; ++i) {
    p_[i] = to_long(ratios[i].numerator());
    q_[i] = to_long(ratios[i].denominator());
  }
}

SystemParams SystemParams::parse(std::string_view k, std::string_view a,
                                 std::optional<std::string_view> omega) {
  const auto kv = parse_rational_list(k);
  const auto av = parse_rational_list(a);
  if (kv.size() != 3) throw std::invalid_argument("--k expects three rationals");
  if (av.size() != 4) throw std::invalid_argument("--a expects four rationals");
  std::optional<Rational> w;
  if (omega && *omega != "formal") w = Rational::parse(*omega);
  return SystemParams({kv[0], kv[1], kv[2]}, {av[0], av[1], av[2], av[3]}, w);
}

const Rational& SystemParams::k(int i) const {
  if (i < 1 || i > 3) throw std::out_of_range("k index");
  return k_[i - 1];
}

const Rational& SystemParams::a(int i) const {
  if (i < 1 || i > 4) throw std::out_of_range("a index");
  return a_[i - 1];
}

Rational SystemParams::kappa(int i) const { return i == 1 ? Rational(1) : k(i - 1); }

long SystemParams::p(int i) const {
  if (i < 1 || i > 3) throw std::out_of_range("p index");
  return p_[i - 1];
}

long SystemParams::q(int i) const {
  if (i < 1 || i > 3) throw std::out_of_range("q index");
  return q_[i - 1];
}

Rational SystemParams::beta(int i) const {
  const Rational quarter(1, 4);
  switch (i) {
    case 1: return k(1) * k(1) * (quarter - a(1) * a(1));
    case 2: return k(2) * k(2) * (quarter - a(2) * a(2));
    case 3: return k(3) * k(3) * (quarter - a(4) * a(4));
    case 4: return k(3) * k(3) * (quarter - a(3) * a(3));
    default: throw std::out_of_range("beta index");
  }
}

Rational SystemParams::alpha(int i) {
  switch (i) {
    case 1: return Rational(1);
    case 2: return Rational(1, 4);
    case 3: return Rational(0);
    default: throw std::out_of_range("alpha index");
  }
}

const Rational& SystemParams::omega() const {
  if (!omega_) throw std::logic_error("omega is formal");
  return *omega_;
}

SystemParams SystemParams::with_omega(std::optional<Rational> omega) const {
  return SystemParams(k_, a_, std::move(omega));
}

std::string SystemParams::k_str() const {
  return k_[0].str() + "," + k_[1].str() + "," + k_[2].str();
}

std::string SystemParams::a_str() const {
  return a_[0].str() + "," + a_[1].str() + "," + a_[2].str() + "," + a_[3].str();
}

const Rational& SpectralData::A(int j) const {
  switch (j) {
    case 0: return A0;
    case 1: return A1;
    case 2: return A2;
    default: throw std::out_of_range("A index");
  }
}

const Rational& SpectralData::ell(int i) const {
  switch (i) {
    case 1: return ell1;
    case 2: return ell2;
    case 3: return ell3;
    default: throw std::out_of_range("ell index");
  }
}

OmegaPoly energy_expanded(const SystemParams& P, const QuantumState& s) {
  const Rational inner = 2 * Rational(s[0]) + 2 * P.k(1) * s[1] + 2 * P.k(2) * s[2] +
                         2 * P.k(3) * s[3] + P.k(1) * P.a(1) + P.k(2) * P.a(2) +
                         P.k(3) * P.a(3) + P.k(3) * P.a(4) + P.k(1) + P.k(2) + P.k(3) + 1;
  return OmegaPoly::monomial(-2 * inner, 1);
}

SpectralData spectral_chain(const SystemParams& P, const QuantumState& s) {
  if (!s.on_lattice()) throw std::invalid_argument("spectral_chain: negative quantum number");
  SpectralData d;
  const Rational m3 = 2 * Rational(s[3]) + P.a(3) + P.a(4) + 1;
  d.A2 = P.k(3) / P.k(2) * m3;
  const Rational m2 = 2 * Rational(s[2]) + d.A2 + P.a(2) + 1;
  d.A1 = P.k(2) / P.k(1) * m2;
  const Rational m1 = 2 * Rational(s[1]) + P.a(1) + d.A1 + 1;
  d.A0 = P.k(1) * m1;
  d.ell3 = -P.k(3) * P.k(3) * m3 * m3;
  d.ell2 = P.k(2) * P.k(2) / 4 - P.k(2) * P.k(2) * m2 * m2;
  d.ell1 = P.k(1) * P.k(1) - d.A0 * d.A0;
  d.E = OmegaPoly::monomial(-(4 * Rational(s[0]) + 2 * d.A0 + 2), 1);
  if (d.E != energy_expanded(P, s)) throw std::logic_error("spectral_chain: energy forms disagree");
  return d;
}

AngularSlotGauge slot_gauge_with(const SystemParams& P, int slot, const Rational& a) {
  AngularSlotGauge g;
  g.slot = slot;
  g.a = a;
  g.k = P.k(slot);
  switch (slot) {
    case 1:
      g.b = P.a(1);
      g.c = Rational(-1, 2);
      g.d = Rational(1, 2);
      break;
    case 2:
      g.b = P.a(2);
      g.c = Rational(0);
      g.d = Rational(1, 2);
      break;
    case 3:
      g.b = P.a(4);
      g.c = Rational(1, 2);
      g.d = Rational(1, 2);
      break;
    default:
      throw std::out_of_range("slot must be 1, 2 or 3");
  }
  return g;
}

AngularSlotGauge slot_gauge(const SystemParams& P, const QuantumState& s, int slot) {
  if (slot == 3) return slot_gauge_with(P, 3, P.a(3));
  const SpectralData d = spectral_chain(P, s);
  return slot_gauge_with(P, slot, slot == 1 ? d.A1 : d.A2);
}

std::string Point::str() const {
  std::ostringstream os;
  os.precision(17);
  os << "(" << r << "," << theta1 << "," << theta2 << "," << theta3 << ")";
  return os.str();
}

bool inside_cell(const SystemParams& P, const Point& p) {
  if (!(p.r > 0)) return false;
  const real half_pi = std::numbers::pi_v<real> / 2;
  const real th[3] = {p.theta1, p.theta2, p.theta3};
  for (int i = 0; i < 3; ++i) {
    const real x = P.k(i + 1).to_real() * th[i];
    if (!(x > 0 && x < half_pi)) return false;
  }
  return true;
}

void require_inside_cell(const SystemParams& P, const Point& p) {
  if (!inside_cell(P, p)) throw std::domain_error("point outside the principal cell: " + p.str());
}

Jet coordinate(const Point& p, int order, int v) { return Jet::variable(p.coords(), order, v); }

Jet radial_factor(real omega, long n0, const Rational& A0, const Jet& r) {
  const Jet x = r * r * omega;
  const real A = A0.to_real();
  Jet f = exp(x * real(-0.5)) * pow(r, A - 1) * std::pow(omega, A / 2);
  return f * laguerre_eval(LaguerreSpec{n0, A0}, x);
}

Jet angular_factor(const AngularSlotGauge& g, long n, const Jet& theta) {
  const Jet kt = theta * g.k.to_real();
  const Jet s = sin(kt), c = cos(kt);
  const Jet x = c * c - s * s;  // cos 2kθ
  Jet w = pow(s, (g.a + g.c).to_real()) * pow(c, (g.b + g.d).to_real());
  return w * jacobi_eval(JacobiSpec{n, g.a, g.b}, x);
}

Wavefunction::Wavefunction(const SystemParams& params, const QuantumState& state)
    : params_(params), state_(state), spec_(spectral_chain(params, state)) {
  if (params_.formal()) throw std::logic_error("wavefunctions require a fixed omega");
}

Jet Wavefunction::factor(int which, const Point& p, int order) const {
  require_inside_cell(params_, p);
  const Jet x = coordinate(p, order, which);
  if (which == 0) return radial_factor(params_.omega().to_real(), state_[0], spec_.A0, x);
  const Rational a = which == 1 ? spec_.A1 : (which == 2 ? spec_.A2 : params_.a(3));
  return angular_factor(slot_gauge_with(params_, which, a), state_[which], x);
}

Jet Wavefunction::operator()(const Point& p, int order) const {
  Jet f = factor(0, p, order);
  for (int i = 1; i <= 3; ++i) f = f * factor(i, p, order);
  return f;
}

std::vector<QuantumState> enumerate_states(long nmax) {
  std::vector<QuantumState> out;
  for (long a = 0; a <= nmax; ++a)
    for (long b = 0; b <= nmax; ++b)
      for (long c = 0; c <= nmax; ++c)
        for (long d = 0; d <= nmax; ++d) out.push_back(QuantumState{{a, b, c, d}});
  return out;
}

std::vector<DegeneracyClass> degeneracy_classes(const SystemParams& params, long nmax) {
  std::map<OmegaPoly, std::vector<QuantumState>> classes;
  for (const auto& s : enumerate_states(nmax)) classes[spectral_chain(params, s).E].push_back(s);
  std::vector<DegeneracyClass> out;
  for (auto& [e, states] : classes) out.push_back({e, std::move(states)});
  std::sort(out.begin(), out.end(), [](const DegeneracyClass& x, const DegeneracyClass& y) {
    return x.energy.eval(Rational(1)) > y.energy.eval(Rational(1));
  });
  return out;
}

}  // namespace ttw4d
