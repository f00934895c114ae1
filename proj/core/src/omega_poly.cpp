#include "ttw4d/omega_poly.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace ttw4d {

OmegaPoly::OmegaPoly(const Rational& c) {
  if (!c.is_zero()) c_.push_back(c);
}

OmegaPoly::OmegaPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

OmegaPoly OmegaPoly::monomial(const Rational& c, unsigned power) {
  OmegaPoly p;
  if (c.is_zero()) return p;
  p.c_.assign(power + 1, Rational(0));
  p.c_[power] = c;
  return p;
}

void OmegaPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Rational OmegaPoly::coefficient(unsigned power) const {
  return power < c_.size() ? c_[power] : Rational(0);
}

Rational OmegaPoly::eval(const Rational& omega) const {
  Rational acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * omega + *it;
  return acc;
}

real OmegaPoly::eval(real omega) const {
  real acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * omega + it->to_real();
  return acc;
}

OmegaPoly& OmegaPoly::operator+=(const OmegaPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

OmegaPoly& OmegaPoly::operator-=(const OmegaPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

OmegaPoly& OmegaPoly::operator*=(const OmegaPoly& o) {
  if (is_zero() || o.is_zero()) {
    c_.clear();
    return *this;
  }
  std::vector<Rational> out(c_.size() + o.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) out[i + j] += c_[i] * o.c_[j];
  c_ = std::move(out);
  trim();
  return *this;
}

OmegaPoly& OmegaPoly::operator*=(const Rational& s) {
  if (s.is_zero()) {
    c_.clear();
    return *this;
  }
  for (auto& c : c_) c *= s;
  return *this;
}

OmegaPoly& OmegaPoly::operator/=(const Rational& s) {
  for (auto& c : c_) c /= s;
  return *this;
}

OmegaPoly operator-(OmegaPoly a) {
  for (auto& c : a.c_) c = -c;
  return a;
}

bool operator<(const OmegaPoly& a, const OmegaPoly& b) {
  if (a.c_.size() != b.c_.size()) return a.c_.size() < b.c_.size();
  for (std::size_t i = a.c_.size(); i-- > 0;) {
    if (a.c_[i] != b.c_[i]) return a.c_[i] < b.c_[i];
  }
  return false;
}

std::string OmegaPoly::str() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    const Rational& c = c_[i];
    if (c.is_zero()) continue;
    Rational mag = abs(c);
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit = mag == Rational(1);
    if (i == 0 || !unit) os << mag.str();
    if (i >= 1) os << (unit ? "" : "*") << "w";
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

std::vector<std::string> OmegaPoly::coefficient_strings() const {
  std::vector<std::string> out;
  out.reserve(c_.size());
  for (const auto& c : c_) out.push_back(c.str());
  return out;
}

std::ostream& operator<<(std::ostream& os, const OmegaPoly& p) { return os << p.str(); }

}  // namespace ttw4d
