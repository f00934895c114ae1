#include "ttw4d/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace ttw4d {

namespace {

struct Trig {
  real k1, k2;
};

Trig trig(const SystemParams& P) { return {P.k(1).to_real(), P.k(2).to_real()}; }

std::array<Jet, 4> metric_from(const Trig& t, const Point& p, int order) {
  const Jet r = coordinate(p, order, 0);
  const Jet s1 = sin(coordinate(p, order, 1) * t.k1);
  const Jet s2 = sin(coordinate(p, order, 2) * t.k2);
  const Jet r2 = r * r;
  const Jet g2 = r2 * s1 * s1;
  return {Jet::constant(p.coords(), order, 1), r2, g2, g2 * s2 * s2};
}

}  // namespace

std::array<Jet, 4> metric_jets(const SystemParams& P, const Point& p, int order) {
  return metric_from(trig(P), p, order);
}

CurvatureReport curvature_at(const SystemParams& P, const Point& p) {
  require_inside_cell(P, p);
  CurvatureReport rep;
  rep.point = p;
  const auto g = metric_jets(P, p, 2);
  std::array<Jet, 4> ginv{g[0], g[0], g[0], g[0]};
  for (int a = 0; a < 4; ++a) {
    rep.metric[a] = g[a].value();
    ginv[a] = reciprocal(g[a].truncated(1));
  }
  // Γ^a_{bc} for a diagonal metric, as order-1 jets.
  const Jet zero = Jet::constant(p.coords(), 1, 0);
  std::vector<Jet> flat(64, zero);
  auto gam_at = [&flat](int a, int b, int c) -> Jet& { return flat[(a * 4 + b) * 4 + c]; };
  auto dmetric = [&](int a, int v) { return g[a].partial(v); };
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c) {
        Jet s = zero;
        if (a == c) s += dmetric(a, b);
        if (a == b) s += dmetric(a, c);
        if (b == c) s -= dmetric(b, a);
        gam_at(a, b, c) = ginv[a] * s * real(0.5);
      }
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c) rep.christoffel[a][b][c] = gam_at(a, b, c).value();

  const auto& G = rep.christoffel;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c)
        for (int d = 0; d < 4; ++d) {
          const real d1 = gam_at(a, d, b).partial(c).value();
          const real d2 = gam_at(a, c, b).partial(d).value();
          real v = d1 - d2, mag = std::abs(d1) + std::abs(d2);
          for (int e = 0; e < 4; ++e) {
            const real q1 = G[a][c][e] * G[e][d][b], q2 = G[a][d][e] * G[e][c][b];
            v += q1 - q2;
            mag += std::abs(q1) + std::abs(q2);
          }
          rep.riemann_scale = std::max(rep.riemann_scale, std::abs(rep.metric[a]) * mag);
          rep.riemann[a][b][c][d] = kRiemannSign * v;
          rep.riemann_lower[a][b][c][d] = rep.metric[a] * rep.riemann[a][b][c][d];
        }
  for (int b = 0; b < 4; ++b)
    for (int d = 0; d < 4; ++d) {
      real v = 0;
      for (int a = 0; a < 4; ++a) v += rep.riemann[a][b][a][d];
      rep.ricci[b][d] = v;
    }
  rep.scalar = 0;
  for (int a = 0; a < 4; ++a) rep.scalar += rep.ricci[a][a] / rep.metric[a];

  const auto& gm = rep.metric;
  auto gd = [&gm](int a, int b) { return a == b ? gm[a] : real(0); };
  const auto& Ric = rep.ricci;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c)
        for (int d = 0; d < 4; ++d) {
          const real ricci_part = gd(a, c) * Ric[b][d] - gd(a, d) * Ric[b][c] -
                                  gd(b, c) * Ric[a][d] + gd(b, d) * Ric[a][c];
          const real metric_part = gd(a, c) * gd(b, d) - gd(a, d) * gd(b, c);
          rep.weyl[a][b][c][d] =
              rep.riemann_lower[a][b][c][d] - ricci_part / 2 + rep.scalar / 6 * metric_part;
        }
  rep.weyl_invariant = weyl_invariant(rep);
  return rep;
}

real weyl_invariant(const CurvatureReport& rep) {
  real sum = 0, scale = 0;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c)
        for (int d = 0; d < 4; ++d) {
          const real w = rep.weyl[a][b][c][d];
          const real term =
              w * w / (rep.metric[a] * rep.metric[b] * rep.metric[c] * rep.metric[d]);
          sum += term;
          scale += std::abs(term);
        }
  if (sum < -1e-12 * std::max(scale, real(1)))
    throw std::logic_error("weyl_invariant: negative contraction");
  return std::sqrt(3 * std::max(sum, real(0)));
}

real SymmetryBounds::worst() const {
  return std::max({antisym_first, antisym_last, pair_exchange, bianchi, weyl_trace, weyl_symmetry});
}

SymmetryBounds symmetry_bounds(const CurvatureReport& rep) {
  SymmetryBounds s;
  const auto& R = rep.riemann_lower;
  const auto& C = rep.weyl;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c)
        for (int d = 0; d < 4; ++d) s.scale = std::max(s.scale, std::abs(R[a][b][c][d]));
  s.scale = std::max(s.scale, rep.riemann_scale);
  const real denom = std::max(s.scale, real(1e-300));
  auto bump = [denom](real& slot, real v) { slot = std::max(slot, std::abs(v) / denom); };
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c)
        for (int d = 0; d < 4; ++d) {
          bump(s.antisym_first, R[a][b][c][d] + R[b][a][c][d]);
          bump(s.antisym_last, R[a][b][c][d] + R[a][b][d][c]);
          bump(s.pair_exchange, R[a][b][c][d] - R[c][d][a][b]);
          bump(s.bianchi, R[a][b][c][d] + R[a][c][d][b] + R[a][d][b][c]);
          bump(s.weyl_symmetry, C[a][b][c][d] + C[b][a][c][d]);
          bump(s.weyl_symmetry, C[a][b][c][d] - C[c][d][a][b]);
        }
  // Traces g^{ac} C_{abcd}.
  for (int b = 0; b < 4; ++b)
    for (int d = 0; d < 4; ++d) {
      real t = 0;
      for (int a = 0; a < 4; ++a) t += C[a][b][a][d] / rep.metric[a];
      bump(s.weyl_trace, t);
    }
  return s;
}

real closed_form_scalar(const SystemParams& P, const Point& p) {
  const auto [k1, k2] = trig(P);
  const real r2 = p.r * p.r;
  const real s = std::sin(k1 * p.theta1);
  const real s2 = s * s;
  return -6 / r2 + k1 * k1 * (6 / r2 - 2 / (r2 * s2)) + 2 * k2 * k2 / (r2 * s2);
}

real closed_form_weyl_signed(const SystemParams& P, const Point& p) {
  const auto [k1, k2] = trig(P);
  const real s = std::sin(k1 * p.theta1);
  return 2 * (k1 * k1 - k2 * k2) / (p.r * p.r * s * s);
}

DiffOperator laplace_beltrami(const SystemParams& P) {
  const Trig t = trig(P);
  DiffOperator op;
  for (int a = 0; a < 4; ++a) {
    MultiIndex two{0, 0, 0, 0}, one{0, 0, 0, 0};
    two[a] = 2;
    one[a] = 1;
    op.add_term(two, Coefficient("g^aa", [t, a](const Point& p, int order) {
                  return reciprocal(metric_from(t, p, order)[a]);
                }));
    op.add_term(one, Coefficient("(1/sqrt g) d_a(sqrt g g^aa)", [t, a](const Point& p, int order) {
                  const auto g = metric_from(t, p, order + 1);
                  const Jet vol = sqrt(g[0] * g[1] * g[2] * g[3]);
                  const Jet flux = (vol / g[a]).partial(a);
                  return flux / vol.truncated(order);
                }));
  }
  return op;
}

Coefficient potential_v0(const SystemParams& P) {
  if (P.formal()) throw std::logic_error("potential_v0: omega must be fixed");
  const real w = P.omega().to_real();
  const real k1 = P.k(1).to_real(), k2 = P.k(2).to_real(), k3 = P.k(3).to_real();
  const real b1 = P.beta(1).to_real(), b2 = P.beta(2).to_real();
  const real b3 = P.beta(3).to_real(), b4 = P.beta(4).to_real();
  return Coefficient("V0", [=](const Point& p, int order) {
    const Jet r = coordinate(p, order, 0);
    const Jet t1 = coordinate(p, order, 1) * k1, t2 = coordinate(p, order, 2) * k2,
              t3 = coordinate(p, order, 3) * k3;
    const Jet r2 = r * r;
    const Jet s1 = sin(t1), c1 = cos(t1), s2 = sin(t2), c2 = cos(t2), s3 = sin(t3), c3 = cos(t3);
    const Jet a2 = r2 * s1 * s1;
    const Jet a3 = a2 * s2 * s2;
    return r2 * (-w * w) + b1 / (r2 * c1 * c1) + b2 / (a2 * c2 * c2) + b3 / (a3 * c3 * c3) +
           b4 / (a3 * s3 * s3);
  });
}

ConformalCheck conformal_identity_check(const SystemParams& P, const Point& p, const Field& f) {
  const Tower tower = build_tower(P);
  const DiffOperator lb = laplace_beltrami(P);
  const CurvatureReport rep = curvature_at(P, p);
  const Jet fj = f(p, 2);
  const Applied h = tower.H.apply_with_scale(fj);
  const Applied l = lb.apply_with_scale(fj);
  const real f0 = fj.value();
  const real v0 = potential_v0(P)(p, 0).value();

  ConformalCheck out;
  const real k1 = P.k(1).to_real(), k2 = P.k(2).to_real();
  out.signed_branch = k1 * k1 < k2 * k2;
  const real w = out.signed_branch ? -rep.weyl_invariant : rep.weyl_invariant;
  out.lhs = h.value.value();
  out.rhs = l.value.value() + v0 * f0 - rep.scalar / 6 * f0 - w / 24 * f0;
  out.residual = out.lhs - out.rhs;
  out.scale = h.scale + l.scale + std::abs(v0 * f0) + std::abs(rep.scalar / 6 * f0) +
              std::abs(w / 24 * f0);
  out.relative = out.scale > 0 ? std::abs(out.residual) / out.scale : std::abs(out.residual);
  return out;
}

}  // namespace ttw4d
