#pragma once

#include <stdexcept>

#include "ttw4d/jet.hpp"
#include "ttw4d/rational.hpp"

namespace ttw4d {

struct JacobiSpec {
  long n = 0;
  Rational a, b;
};

struct LaguerreSpec {
  long n = 0;
  Rational alpha;
};

namespace detail {

inline Rational times(const Rational& v, const Rational& c) { return v * c; }
inline real times(real v, const Rational& c) { return v * c.to_real(); }
inline Jet times(const Jet& v, const Rational& c) { return v * c.to_real(); }

inline Rational plus(const Rational& v, const Rational& c) { return v + c; }
inline real plus(real v, const Rational& c) { return v + c.to_real(); }
inline Jet plus(const Jet& v, const Rational& c) { return v + c.to_real(); }

inline Rational one_like(const Rational&) { return Rational(1); }
inline real one_like(real) { return real(1); }
inline Jet one_like(const Jet& x) { return Jet::constant(x.base(), x.order(), 1); }

}  // namespace detail

// P_n^{(a,b)}(x) by the three-term recurrence in n.
template <class V>
V jacobi_eval(const JacobiSpec& s, const V& x) {
  if (s.n < 0) throw std::domain_error("jacobi_eval: negative degree");
  const Rational& a = s.a;
  const Rational& b = s.b;
  V prev = detail::one_like(x);
  if (s.n == 0) return prev;
  V cur = detail::plus(detail::times(x, (a + b + 2) / 2), (a - b) / 2);
  for (long n = 2; n <= s.n; ++n) {
    const Rational m(n);
    const Rational ab = a + b;
    const Rational d = 2 * m * (m + ab) * (2 * m + ab - 2);
    if (d.is_zero()) throw std::domain_error("jacobi_eval: degenerate recurrence");
    const Rational c1 = (2 * m + ab - 1) * (2 * m + ab) * (2 * m + ab - 2) / d;
    const Rational c0 = (2 * m + ab - 1) * (a * a - b * b) / d;
    const Rational c2 = 2 * (m + a - 1) * (m + b - 1) * (2 * m + ab) / d;
    V next = detail::plus(detail::times(x, c1), c0) * cur - detail::times(prev, c2);
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

// L_n^{(α)}(x) by the three-term recurrence in n.
template <class V>
V laguerre_eval(const LaguerreSpec& s, const V& x) {
  if (s.n < 0) throw std::domain_error("laguerre_eval: negative degree");
  V prev = detail::one_like(x);
  if (s.n == 0) return prev;
  V cur = detail::plus(detail::times(x, Rational(-1)), 1 + s.alpha);
  for (long n = 2; n <= s.n; ++n) {
    const Rational m(n);
    V lin = detail::plus(detail::times(x, Rational(-1)), 2 * m - 1 + s.alpha);
    V next = detail::times(lin * cur - detail::times(prev, m - 1 + s.alpha), 1 / m);
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

}  // namespace ttw4d
