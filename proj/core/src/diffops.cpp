#include "ttw4d/diffops.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace ttw4d {

namespace {

std::string number_tag(real v) {
  std::ostringstream os;
  os.precision(12);
  os << v;
  return os.str();
}

Point point_of(const BasePoint& b) { return Point{b[0], b[1], b[2], b[3]}; }

long binomial(int n, int k) {
  long b = 1;
  for (int j = 1; j <= k; ++j) b = b * (n - k + j) / j;
  return b;
}

}  // namespace

Coefficient::Coefficient(std::string tag, Eval eval)
    : tag_(std::move(tag)), eval_(std::make_shared<const Eval>(std::move(eval))) {}

Coefficient Coefficient::constant(real value) {
  Coefficient c(number_tag(value), [value](const Point& p, int order) {
    return Jet::constant(p.coords(), order, value);
  });
  c.const_ = value;
  return c;
}

Coefficient Coefficient::of_coordinate(std::string tag, int v, std::function<Jet(const Jet&)> fn) {
  return Coefficient(std::move(tag), [v, fn = std::move(fn)](const Point& p, int order) {
    return fn(coordinate(p, order, v));
  });
}

Jet Coefficient::operator()(const Point& p, int order) const { return (*eval_)(p, order); }

Coefficient Coefficient::derivative(const MultiIndex& mu) const {
  const int d = total_degree(mu);
  if (d == 0) return *this;
  if (const_) return constant(0);
  auto e = eval_;
  return Coefficient("D(" + tag_ + ")", [e, mu, d](const Point& p, int order) {
    return (*e)(p, order + d).partial(mu);
  });
}

Coefficient operator+(const Coefficient& a, const Coefficient& b) {
  if (a.const_ && b.const_) return Coefficient::constant(*a.const_ + *b.const_);
  if (a.const_ && *a.const_ == 0) return b;
  if (b.const_ && *b.const_ == 0) return a;
  auto ea = a.eval_, eb = b.eval_;
  return Coefficient(a.tag_ + " + " + b.tag_, [ea, eb](const Point& p, int order) {
    Jet s = (*ea)(p, order);
    s += (*eb)(p, order);
    return s;
  });
}

Coefficient operator*(real s, const Coefficient& a) {
  if (a.const_) return Coefficient::constant(s * *a.const_);
  if (s == 1) return a;
  if (s == 0) return Coefficient::constant(0);
  auto ea = a.eval_;
  return Coefficient(number_tag(s) + "*(" + a.tag_ + ")",
                     [ea, s](const Point& p, int order) { return (*ea)(p, order) * s; });
}

Coefficient operator*(const Coefficient& a, const Coefficient& b) {
  if (a.const_) return *a.const_ * b;
  if (b.const_) return *b.const_ * a;
  auto ea = a.eval_, eb = b.eval_;
  return Coefficient("(" + a.tag_ + ")*(" + b.tag_ + ")", [ea, eb](const Point& p, int order) {
    return (*ea)(p, order) * (*eb)(p, order);
  });
}

DiffOperator DiffOperator::identity() { return constant(1); }

DiffOperator DiffOperator::constant(real c) {
  DiffOperator d;
  d.add_term({0, 0, 0, 0}, Coefficient::constant(c));
  return d;
}

DiffOperator DiffOperator::derivative(const MultiIndex& mu) {
  DiffOperator d;
  d.add_term(mu, Coefficient::constant(1));
  return d;
}

DiffOperator& DiffOperator::add_term(const MultiIndex& mu, const Coefficient& c) {
  if (c.constant_value() && *c.constant_value() == 0) return *this;
  auto it = terms_.find(mu);
  if (it == terms_.end()) {
    terms_.emplace(mu, c);
  } else {
    Coefficient sum = it->second + c;
    if (sum.constant_value() && *sum.constant_value() == 0)
      terms_.erase(it);
    else
      it->second = sum;
  }
  return *this;
}

int DiffOperator::max_order() const {
  int m = 0;
  for (const auto& [mu, c] : terms_) m = std::max(m, total_degree(mu));
  return m;
}

Applied DiffOperator::apply_with_scale(const Jet& f) const {
  const int out_order = f.order() - max_order();
  if (out_order < 0) throw std::domain_error("DiffOperator::apply: insufficient jet order");
  const Point p = point_of(f.base());
  Jet out(f.base(), out_order);
  real scale = 0;
  for (const auto& [mu, c] : terms_) {
    Jet d = f.partial(mu).truncated(out_order);
    if (auto cv = c.constant_value()) {
      d *= *cv;
    } else {
      Jet cj = c(p, out_order);
      if (!std::isfinite(cj.value())) throw std::domain_error("coefficient singular at " + p.str());
      d = cj * d;
    }
    scale += std::abs(d.value());
    out += d;
  }
  return {std::move(out), scale};
}

Jet DiffOperator::apply(const Jet& f) const { return apply_with_scale(f).value; }

Jet DiffOperator::apply(const Field& f, const Point& p, int out_order) const {
  return apply(f(p, out_order + max_order()));
}

DiffOperator& DiffOperator::operator+=(const DiffOperator& o) {
  for (const auto& [mu, c] : o.terms_) add_term(mu, c);
  return *this;
}

DiffOperator operator*(real s, const DiffOperator& a) {
  DiffOperator out;
  for (const auto& [mu, c] : a.terms_) out.add_term(mu, s * c);
  return out;
}

DiffOperator operator-(const DiffOperator& a, const DiffOperator& b) { return a + (-1.0) * b; }

DiffOperator operator*(const Coefficient& c, const DiffOperator& a) {
  DiffOperator out;
  for (const auto& [mu, d] : a.terms_) out.add_term(mu, c * d);
  return out;
}

std::string DiffOperator::describe() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [mu, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "[" << c.tag() << "]";
    const char* names[4] = {"r", "t1", "t2", "t3"};
    for (int v = 0; v < kJetVars; ++v)
      if (mu[v]) os << " d" << names[v] << (mu[v] > 1 ? "^" + std::to_string(mu[v]) : "");
  }
  return os.str();
}

DiffOperator compose(const DiffOperator& outer, const DiffOperator& inner) {
  DiffOperator out;
  for (const auto& [mu, c] : outer.terms()) {
    for (const auto& [nu, d] : inner.terms()) {
      // ∂^μ (d ∂^ν f) = Σ_{λ≤μ} C(μ,λ) ∂^λ d · ∂^{μ−λ+ν} f
      for (int l0 = 0; l0 <= mu[0]; ++l0)
        for (int l1 = 0; l1 <= mu[1]; ++l1)
          for (int l2 = 0; l2 <= mu[2]; ++l2)
            for (int l3 = 0; l3 <= mu[3]; ++l3) {
              const MultiIndex lam{l0, l1, l2, l3};
              Coefficient dl = d.derivative(lam);
              if (dl.constant_value() && *dl.constant_value() == 0) continue;
              real w = 1;
              MultiIndex target;
              for (int v = 0; v < kJetVars; ++v) {
                w *= static_cast<real>(binomial(mu[v], lam[v]));
                target[v] = mu[v] - lam[v] + nu[v];
              }
              out.add_term(target, c * (w * dl));
            }
    }
  }
  return out;
}

DiffOperator commutator(const DiffOperator& a, const DiffOperator& b) {
  return compose(a, b) - compose(b, a);
}

const DiffOperator& Tower::L(int i) const {
  switch (i) {
    case 0: return H;
    case 1: return L1;
    case 2: return L2;
    case 3: return L3;
    default: throw std::out_of_range("tower index");
  }
}

Tower build_tower(const SystemParams& P) {
  if (P.formal()) throw std::logic_error("build_tower: omega must be fixed");
  const real w = P.omega().to_real();
  const real k1 = P.k(1).to_real(), k2 = P.k(2).to_real(), k3 = P.k(3).to_real();
  const real b1 = P.beta(1).to_real(), b2 = P.beta(2).to_real();
  const real b3 = P.beta(3).to_real(), b4 = P.beta(4).to_real();
  const MultiIndex d0{0, 0, 0, 0};
  auto dd = [](int v, int m) {
    MultiIndex mu{0, 0, 0, 0};
    mu[v] = m;
    return mu;
  };

  Tower t;
  t.L3.add_term(dd(3, 2), Coefficient::constant(1));
  t.L3.add_term(d0, Coefficient::of_coordinate("b3/cos^2(k3 t3) + b4/sin^2(k3 t3)", 3,
                                               [k3, b3, b4](const Jet& th) {
                                                 const Jet s = sin(th * k3), c = cos(th * k3);
                                                 return b3 / (c * c) + b4 / (s * s);
                                               }));

  t.L2.add_term(dd(2, 2), Coefficient::constant(1));
  t.L2.add_term(dd(2, 1), Coefficient::of_coordinate("k2 cot(k2 t2)", 2, [k2](const Jet& th) {
                  return cos(th * k2) / sin(th * k2) * k2;
                }));
  t.L2.add_term(d0, Coefficient::of_coordinate("b2/cos^2(k2 t2)", 2, [k2, b2](const Jet& th) {
                  const Jet c = cos(th * k2);
                  return b2 / (c * c);
                }));
  t.L2 += Coefficient::of_coordinate("1/sin^2(k2 t2)", 2, [k2](const Jet& th) {
            const Jet s = sin(th * k2);
            return 1.0 / (s * s);
          }) * t.L3;

  t.L1.add_term(dd(1, 2), Coefficient::constant(1));
  t.L1.add_term(dd(1, 1), Coefficient::of_coordinate("2 k1 cot(k1 t1)", 1, [k1](const Jet& th) {
                  return cos(th * k1) / sin(th * k1) * (2 * k1);
                }));
  const real v1 = (k1 * k1 - k2 * k2) / 4;
  t.L1.add_term(d0, Coefficient::of_coordinate("b1/cos^2(k1 t1) + (k1^2-k2^2)/(4 sin^2(k1 t1))", 1,
                                               [k1, b1, v1](const Jet& th) {
                                                 const Jet s = sin(th * k1), c = cos(th * k1);
                                                 return b1 / (c * c) + v1 / (s * s);
                                               }));
  t.L1 += Coefficient::of_coordinate("1/sin^2(k1 t1)", 1, [k1](const Jet& th) {
            const Jet s = sin(th * k1);
            return 1.0 / (s * s);
          }) * t.L2;

  t.H.add_term(dd(0, 2), Coefficient::constant(1));
  t.H.add_term(dd(0, 1), Coefficient::of_coordinate("3/r", 0, [](const Jet& r) { return 3.0 / r; }));
  const real v2 = 1 - k1 * k1;
  t.H.add_term(d0, Coefficient::of_coordinate("-w^2 r^2 + (1-k1^2)/r^2", 0, [w, v2](const Jet& r) {
                 const Jet r2 = r * r;
                 return r2 * (-w * w) + v2 / r2;
               }));
  t.H += Coefficient::of_coordinate("1/r^2", 0, [](const Jet& r) { return 1.0 / (r * r); }) * t.L1;
  return t;
}

Jet apply_chain(const std::vector<DiffOperator>& chain, const Jet& f) {
  Jet g = f;
  for (const auto& op : chain) g = op.apply(g);
  return g;
}

}  // namespace ttw4d
