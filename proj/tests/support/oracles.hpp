#pragma once

// Independent reference values used only by the tests.

#include <cmath>
#include <functional>
#include <random>

#include "ttw4d/rational.hpp"

namespace oracle {

using ttw4d::Rational;

inline Rational factorial(long n) {
  Rational f(1);
  for (long j = 2; j <= n; ++j) f *= Rational(j);
  return f;
}

inline Rational rising(const Rational& x, long m) {
  Rational p(1);
  for (long j = 0; j < m; ++j) p *= x + Rational(j);
  return p;
}

// Hypergeometric series P_n^(a,b)(x) = Σ_k (n+a+b+1)_k (a+k+1)_{n-k} / (k!(n-k)!) ((x-1)/2)^k.
inline Rational jacobi_series(long n, const Rational& a, const Rational& b, const Rational& x) {
  Rational sum(0), t(1);
  const Rational h = (x - Rational(1)) / Rational(2);
  for (long k = 0; k <= n; ++k) {
    sum += rising(Rational(n) + a + b + Rational(1), k) * rising(a + Rational(k + 1), n - k) /
           (factorial(k) * factorial(n - k)) * t;
    t *= h;
  }
  return sum;
}

inline double jacobi_series(long n, double a, double b, double x) {
  double sum = 0;
  for (long k = 0; k <= n; ++k) {
    double c = 1;
    for (long j = 0; j < k; ++j) c *= (n + a + b + 1 + j) / double(j + 1);
    for (long j = 0; j < n - k; ++j) c *= (a + k + 1 + j) / double(j + 1);
    sum += c * std::pow((x - 1) / 2, double(k));
  }
  return sum;
}

// L_n^(α)(x) = Σ_k (α+k+1)_{n-k}/(n-k)! · (-x)^k/k!.
inline Rational laguerre_series(long n, const Rational& alpha, const Rational& x) {
  Rational sum(0), t(1);
  for (long k = 0; k <= n; ++k) {
    sum += rising(alpha + Rational(k + 1), n - k) / (factorial(n - k) * factorial(k)) * t;
    t *= -x;
  }
  return sum;
}

inline double laguerre_series(long n, double alpha, double x) {
  double sum = 0;
  for (long k = 0; k <= n; ++k) {
    double c = 1;
    for (long j = 0; j < n - k; ++j) c *= (alpha + k + 1 + j) / double(j + 1);
    for (long j = 1; j <= k; ++j) c /= double(j);
    sum += c * std::pow(-x, double(k));
  }
  return sum;
}

// Fourth-order central difference.
inline double central_diff(const std::function<double(double)>& f, double x, double h = 1e-3) {
  return (-f(x + 2 * h) + 8 * f(x + h) - 8 * f(x - h) + f(x - 2 * h)) / (12 * h);
}

inline double central_diff2(const std::function<double(double)>& f, double x, double h = 1e-3) {
  return (-f(x + 2 * h) + 16 * f(x + h) - 30 * f(x) + 16 * f(x - h) - f(x - 2 * h)) / (12 * h * h);
}

inline Rational random_rational(std::mt19937_64& rng, long span = 40) {
  const long num = static_cast<long>(rng() % (2 * span + 1)) - span;
  const long den = 1 + static_cast<long>(rng() % span);
  return Rational(num, den);
}

}  // namespace oracle
