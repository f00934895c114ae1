#include "ttw4d/jet.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>

namespace ttw4d {

int total_degree(const MultiIndex& mu) { return mu[0] + mu[1] + mu[2] + mu[3]; }

real multi_factorial(const MultiIndex& mu) {
  real f = 1;
  for (int m : mu)
    for (int j = 2; j <= m; ++j) f *= j;
  return f;
}

std::size_t jet_size(int order) {
  // C(order + 4, 4)
  const std::size_t o = static_cast<std::size_t>(order);
  return (o + 1) * (o + 2) * (o + 3) * (o + 4) / 24;
}

JetLayout::JetLayout(int order) : order_(order) {
  const std::size_t side = static_cast<std::size_t>(order) + 1;
  lookup_.assign(side * side * side * side, -1);
  for (int d = 0; d <= order; ++d) {
    for (int a = d; a >= 0; --a)
      for (int b = d - a; b >= 0; --b)
        for (int c = d - a - b; c >= 0; --c) {
          const MultiIndex mu{a, b, c, d - a - b - c};
          lookup_[key(mu)] = static_cast<std::int32_t>(monomials_.size());
          monomials_.push_back(mu);
          degrees_.push_back(d);
        }
  }
  for (std::size_t i = 0; i < monomials_.size(); ++i) {
    for (std::size_t j = 0; j < monomials_.size(); ++j) {
      if (degrees_[i] + degrees_[j] > order) continue;
      MultiIndex sum;
      for (int v = 0; v < kJetVars; ++v) sum[v] = monomials_[i][v] + monomials_[j][v];
      products_.push_back({static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j),
                           static_cast<std::uint32_t>(lookup_[key(sum)])});
    }
  }
}

std::size_t JetLayout::key(const MultiIndex& mu) const {
  const std::size_t side = static_cast<std::size_t>(order_) + 1;
  return static_cast<std::size_t>(mu[0]) +
         side * (static_cast<std::size_t>(mu[1]) +
                 side * (static_cast<std::size_t>(mu[2]) + side * static_cast<std::size_t>(mu[3])));
}

std::size_t JetLayout::position(const MultiIndex& mu) const {
  for (int m : mu)
    if (m < 0) throw std::out_of_range("JetLayout: negative multi-index");
  if (total_degree(mu) > order_) throw std::out_of_range("JetLayout: multi-index above order");
  return static_cast<std::size_t>(lookup_[key(mu)]);
}

const JetLayout& JetLayout::of(int order) {
  if (order < 0 || order > kMaxJetOrder)
    throw std::out_of_range("JetLayout: order " + std::to_string(order) + " unsupported");
  static std::array<std::once_flag, kMaxJetOrder + 1> flags;
  static std::array<std::unique_ptr<JetLayout>, kMaxJetOrder + 1> layouts;
  std::call_once(flags[order], [order] { layouts[order] = std::make_unique<JetLayout>(order); });
  return *layouts[order];
}

Jet::Jet(const BasePoint& base, int order)
    : base_(base), layout_(&JetLayout::of(order)), c_(layout_->size(), real(0)) {}

Jet Jet::constant(const BasePoint& base, int order, real value) {
  Jet j(base, order);
  j.c_[0] = value;
  return j;
}

Jet Jet::variable(const BasePoint& base, int order, int var) {
  if (var < 0 || var >= kJetVars) throw std::out_of_range("Jet::variable: bad variable");
  Jet j(base, order);
  j.c_[0] = base[var];
  if (order >= 1) {
    MultiIndex e{0, 0, 0, 0};
    e[var] = 1;
    j.c_[j.layout_->position(e)] = 1;
  }
  return j;
}

real Jet::coefficient(const MultiIndex& mu) const { return c_[layout_->position(mu)]; }

real Jet::derivative(const MultiIndex& mu) const { return multi_factorial(mu) * coefficient(mu); }

Jet Jet::partial(int var) const {
  if (order() < 1) throw std::domain_error("Jet::partial: order exhausted");
  Jet out(base_, order() - 1);
  const JetLayout& lo = *out.layout_;
  for (std::size_t p = 0; p < lo.size(); ++p) {
    MultiIndex mu = lo.monomial(p);
    mu[var] += 1;
    out.c_[p] = static_cast<real>(mu[var]) * c_[layout_->position(mu)];
  }
  return out;
}

Jet Jet::partial(const MultiIndex& mu) const {
  if (total_degree(mu) > order()) throw std::domain_error("Jet::partial: order exhausted");
  if (total_degree(mu) == 0) return *this;
  // Direct extraction: coefficient of ν in ∂^μ f is (ν+μ)!/ν! · c[ν+μ].
  Jet out(base_, order() - total_degree(mu));
  const JetLayout& lo = *out.layout_;
  for (std::size_t p = 0; p < lo.size(); ++p) {
    MultiIndex nu = lo.monomial(p);
    real w = 1;
    for (int v = 0; v < kJetVars; ++v) {
      for (int j = 1; j <= mu[v]; ++j) w *= static_cast<real>(nu[v] + j);
      nu[v] += mu[v];
    }
    out.c_[p] = w * c_[layout_->position(nu)];
  }
  return out;
}

Jet Jet::truncated(int order) const {
  if (order > this->order()) throw std::domain_error("Jet::truncated: cannot raise order");
  Jet out(base_, order);
  std::copy_n(c_.begin(), out.c_.size(), out.c_.begin());
  return out;
}

real Jet::max_abs_derivative() const {
  real m = 0;
  for (std::size_t p = 0; p < c_.size(); ++p)
    m = std::max(m, std::abs(c_[p]) * multi_factorial(layout_->monomial(p)));
  return m;
}

void Jet::require_compatible(const Jet& o) const {
  if (layout_ != o.layout_) throw std::invalid_argument("Jet: order mismatch");
  if (base_ != o.base_) throw std::invalid_argument("Jet: base point mismatch");
}

Jet& Jet::operator+=(const Jet& o) {
  require_compatible(o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

Jet& Jet::operator-=(const Jet& o) {
  require_compatible(o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

Jet& Jet::operator*=(const Jet& o) { return *this = *this * o; }
Jet& Jet::operator/=(const Jet& o) { return *this = *this / o; }

Jet& Jet::operator*=(real s) {
  for (auto& c : c_) c *= s;
  return *this;
}

Jet& Jet::operator/=(real s) {
  for (auto& c : c_) c /= s;
  return *this;
}

Jet operator*(const Jet& a, const Jet& b) {
  a.require_compatible(b);
  Jet out(a.base_, a.order());
  const real* x = a.c_.data();
  const real* y = b.c_.data();
  real* z = out.c_.data();
  for (const auto& p : a.layout_->products()) z[p.out] += x[p.lhs] * y[p.rhs];
  return out;
}

Jet operator/(const Jet& a, const Jet& b) { return a * reciprocal(b); }

Jet operator-(real s, Jet a) {
  for (auto& c : a.c_) c = -c;
  a.c_[0] += s;
  return a;
}

Jet operator/(real s, const Jet& a) { return reciprocal(a) * s; }

Jet operator-(Jet a) {
  for (auto& c : a.c_) c = -c;
  return a;
}

Jet compose_series(const Jet& a, std::span<const real> taylor) {
  const int order = a.order();
  Jet h = a;
  h.coefficients()[0] = 0;
  const int top = std::min<int>(order, static_cast<int>(taylor.size()) - 1);
  Jet acc = Jet::constant(a.base(), order, top >= 0 ? taylor[top] : real(0));
  for (int k = top - 1; k >= 0; --k) {
    acc = acc * h;
    acc += taylor[k];
  }
  return acc;
}

Jet reciprocal(const Jet& a) {
  const real a0 = a.value();
  if (a0 == 0) throw std::domain_error("Jet: division by jet with zero constant term");
  std::vector<real> t(a.order() + 1);
  real p = 1 / a0;
  for (auto& tk : t) {
    tk = p;
    p = -p / a0;
  }
  return compose_series(a, t);
}

Jet sin(const Jet& a) {
  const real s = std::sin(a.value()), c = std::cos(a.value());
  std::vector<real> t(a.order() + 1);
  real fact = 1;
  for (int k = 0; k <= a.order(); ++k) {
    if (k > 0) fact *= k;
    const real d[4] = {s, c, -s, -c};
    t[k] = d[k % 4] / fact;
  }
  return compose_series(a, t);
}

Jet cos(const Jet& a) {
  const real s = std::sin(a.value()), c = std::cos(a.value());
  std::vector<real> t(a.order() + 1);
  real fact = 1;
  for (int k = 0; k <= a.order(); ++k) {
    if (k > 0) fact *= k;
    const real d[4] = {c, -s, -c, s};
    t[k] = d[k % 4] / fact;
  }
  return compose_series(a, t);
}

Jet exp(const Jet& a) {
  const real e = std::exp(a.value());
  std::vector<real> t(a.order() + 1);
  real fact = 1;
  for (int k = 0; k <= a.order(); ++k) {
    if (k > 0) fact *= k;
    t[k] = e / fact;
  }
  return compose_series(a, t);
}

Jet log(const Jet& a) {
  const real a0 = a.value();
  if (!(a0 > 0)) throw std::domain_error("Jet log: nonpositive argument");
  std::vector<real> t(a.order() + 1);
  t[0] = std::log(a0);
  real p = 1;
  for (int k = 1; k <= a.order(); ++k) {
    p /= a0;
    t[k] = (k % 2 ? p : -p) / k;
  }
  return compose_series(a, t);
}

Jet pow(const Jet& a, int exponent) {
  if (exponent < 0) return reciprocal(pow(a, -exponent));
  Jet result = Jet::constant(a.base(), a.order(), 1);
  Jet b = a;
  for (unsigned e = static_cast<unsigned>(exponent); e; e >>= 1) {
    if (e & 1u) result = result * b;
    if (e > 1) b = b * b;
  }
  return result;
}

Jet pow(const Jet& a, real exponent) {
  if (exponent == std::floor(exponent) && std::abs(exponent) <= 64)
    return pow(a, static_cast<int>(exponent));
  const real a0 = a.value();
  if (!(a0 > 0)) throw std::domain_error("Jet pow: nonpositive base with non-integer exponent");
  std::vector<real> t(a.order() + 1);
  real binom = 1;
  for (int k = 0; k <= a.order(); ++k) {
    if (k > 0) binom *= (exponent - (k - 1)) / k;
    t[k] = binom * std::pow(a0, exponent - k);
  }
  return compose_series(a, t);
}

Jet sqrt(const Jet& a) { return pow(a, real(0.5)); }

}  // namespace ttw4d
