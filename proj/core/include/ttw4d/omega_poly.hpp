#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "ttw4d/rational.hpp"

namespace ttw4d {

/// Polynomial in the formal frequency ω with rational coefficients.
/// coefficient(p) multiplies ω^p. The zero polynomial has no stored coefficients.
class OmegaPoly {
 public:
  OmegaPoly() = default;
  OmegaPoly(const Rational& c);  // NOLINT(google-explicit-constructor)
  OmegaPoly(long c) : OmegaPoly(Rational(c)) {}  // NOLINT
  explicit OmegaPoly(std::vector<Rational> coeffs);

  static OmegaPoly omega() { return monomial(Rational(1), 1); }
  static OmegaPoly monomial(const Rational& c, unsigned power);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  Rational coefficient(unsigned power) const;
  const std::vector<Rational>& coefficients() const { return c_; }

  Rational eval(const Rational& omega) const;
  real eval(real omega) const;

  std::string str() const;
  std::vector<std::string> coefficient_strings() const;

  OmegaPoly& operator+=(const OmegaPoly& o);
  OmegaPoly& operator-=(const OmegaPoly& o);
  OmegaPoly& operator*=(const OmegaPoly& o);
  OmegaPoly& operator*=(const Rational& s);
  // Exact division by a nonzero rational.
  OmegaPoly& operator/=(const Rational& s);

  friend OmegaPoly operator+(OmegaPoly a, const OmegaPoly& b) { return a += b; }
  friend OmegaPoly operator-(OmegaPoly a, const OmegaPoly& b) { return a -= b; }
  friend OmegaPoly operator*(OmegaPoly a, const OmegaPoly& b) { return a *= b; }
  friend OmegaPoly operator*(OmegaPoly a, const Rational& s) { return a *= s; }
  friend OmegaPoly operator*(const Rational& s, OmegaPoly a) { return a *= s; }
  friend OmegaPoly operator/(OmegaPoly a, const Rational& s) { return a /= s; }
  friend OmegaPoly operator-(OmegaPoly a);

  friend bool operator==(const OmegaPoly& a, const OmegaPoly& b) { return a.c_ == b.c_; }

  // Total order (degree, then coefficients from the top) for use as a map key.
  friend bool operator<(const OmegaPoly& a, const OmegaPoly& b);

 private:
  void trim();
  std::vector<Rational> c_;
};

std::ostream& operator<<(std::ostream& os, const OmegaPoly& p);

}  // namespace ttw4d
