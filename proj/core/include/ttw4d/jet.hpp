#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "ttw4d/real.hpp"

namespace ttw4d {

inline constexpr int kJetVars = 4;
inline constexpr int kMaxJetOrder = 14;

using MultiIndex = std::array<int, kJetVars>;
using BasePoint = std::array<real, kJetVars>;

int total_degree(const MultiIndex& mu);
real multi_factorial(const MultiIndex& mu);

// Immutable monomial table for one truncation order, shared by all jets of that order.
class JetLayout {
 public:
  struct Product {
    std::uint32_t lhs, rhs, out;
  };

  static const JetLayout& of(int order);

  int order() const { return order_; }
  std::size_t size() const { return monomials_.size(); }
  const MultiIndex& monomial(std::size_t pos) const { return monomials_[pos]; }
  int degree(std::size_t pos) const { return degrees_[pos]; }
  std::size_t position(const MultiIndex& mu) const;
  const std::vector<Product>& products() const { return products_; }

  explicit JetLayout(int order);

 private:
  std::size_t key(const MultiIndex& mu) const;

  int order_;
  std::vector<MultiIndex> monomials_;
  std::vector<int> degrees_;
  std::vector<std::int32_t> lookup_;
  std::vector<Product> products_;
};

std::size_t jet_size(int order);

// Truncated Taylor expansion in (r, θ1, θ2, θ3) about a base point.
// Coefficients are stored as f^(μ)/μ!.
class Jet {
 public:
  Jet(const BasePoint& base, int order);

  static Jet constant(const BasePoint& base, int order, real value);
  static Jet variable(const BasePoint& base, int order, int var);

  const BasePoint& base() const { return base_; }
  int order() const { return layout_->order(); }
  const JetLayout& layout() const { return *layout_; }

  real value() const { return c_[0]; }
  real coefficient(const MultiIndex& mu) const;
  real derivative(const MultiIndex& mu) const;
  std::span<const real> coefficients() const { return c_; }
  std::span<real> coefficients() { return c_; }

  // Partial derivative jets lose one order per differentiation.
  Jet partial(int var) const;
  Jet partial(const MultiIndex& mu) const;
  Jet truncated(int order) const;

  // Largest |coefficient| weighted by μ!; a scale for relative comparisons.
  real max_abs_derivative() const;

  Jet& operator+=(const Jet& o);
  Jet& operator-=(const Jet& o);
  Jet& operator*=(const Jet& o);
  Jet& operator/=(const Jet& o);
  Jet& operator+=(real s) { c_[0] += s; return *this; }
  Jet& operator-=(real s) { c_[0] -= s; return *this; }
  Jet& operator*=(real s);
  Jet& operator/=(real s);

  friend Jet operator+(Jet a, const Jet& b) { return a += b; }
  friend Jet operator-(Jet a, const Jet& b) { return a -= b; }
  friend Jet operator*(const Jet& a, const Jet& b);
  friend Jet operator/(const Jet& a, const Jet& b);
  friend Jet operator+(Jet a, real s) { return a += s; }
  friend Jet operator+(real s, Jet a) { return a += s; }
  friend Jet operator-(Jet a, real s) { return a -= s; }
  friend Jet operator-(real s, Jet a);
  friend Jet operator*(Jet a, real s) { return a *= s; }
  friend Jet operator*(real s, Jet a) { return a *= s; }
  friend Jet operator/(Jet a, real s) { return a /= s; }
  friend Jet operator/(real s, const Jet& a);
  friend Jet operator-(Jet a);

 private:
  void require_compatible(const Jet& o) const;

  BasePoint base_;
  const JetLayout* layout_;
  std::vector<real> c_;
};

// Σ t[k] (a − a₀)^k, truncated at a's order; t holds univariate Taylor coefficients.
Jet compose_series(const Jet& a, std::span<const real> taylor);

Jet reciprocal(const Jet& a);
Jet sin(const Jet& a);
Jet cos(const Jet& a);
Jet exp(const Jet& a);
Jet log(const Jet& a);
Jet pow(const Jet& a, real exponent);
Jet pow(const Jet& a, int exponent);
Jet sqrt(const Jet& a);

}  // namespace ttw4d
