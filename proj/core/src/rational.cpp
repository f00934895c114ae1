#include "ttw4d/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace ttw4d {

Rational::Rational(long num, long den) {
  if (den == 0) throw std::domain_error("Rational: zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

namespace {

mpz_class parse_integer(std::string_view s, std::string_view whole) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
  if (i == s.size()) throw std::invalid_argument("not a rational: '" + std::string(whole) + "'");
  for (std::size_t j = i; j < s.size(); ++j)
    if (!std::isdigit(static_cast<unsigned char>(s[j])))
      throw std::invalid_argument("not a rational: '" + std::string(whole) + "'");
  std::string digits(s.front() == '+' ? s.substr(1) : s);
  return mpz_class(digits, 10);
}

std::string_view strip(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  const std::string_view t = strip(text);
  const auto slash = t.find('/');
  mpq_class q;
  if (slash == std::string_view::npos) {
    q = mpq_class(parse_integer(t, text));
  } else {
    const mpz_class num = parse_integer(strip(t.substr(0, slash)), text);
    const std::string_view den_text = strip(t.substr(slash + 1));
    if (!den_text.empty() && (den_text.front() == '-' || den_text.front() == '+'))
      throw std::invalid_argument("not a rational: '" + std::string(text) + "'");
    const mpz_class den = parse_integer(den_text, text);
    if (den == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
    q = mpq_class(num, den);
  }
  return Rational(q);
}

real Rational::to_real() const {
#if defined(TTW4D_EXTENDED_PRECISION)
  mpf_class f(v_, 128);
  // Split into a double head and tail to keep the extra mantissa bits.
  const double head = f.get_d();
  mpf_class rest(f - head, 128);
  return static_cast<long double>(head) + static_cast<long double>(rest.get_d());
#else
  return v_.get_d();
#endif
}

std::string Rational::str() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  v_ /= o.v_;
  return *this;
}

Rational abs(const Rational& x) { return x.sign() < 0 ? -x : x; }

Rational pow(const Rational& base, int exponent) {
  if (exponent < 0) return Rational(1) / pow(base, -exponent);
  Rational result(1), b = base;
  for (unsigned e = static_cast<unsigned>(exponent); e; e >>= 1) {
    if (e & 1u) result *= b;
    if (e > 1) b *= b;
  }
  return result;
}

Rational pochhammer(const Rational& x, unsigned m) {
  Rational p(1);
  for (unsigned j = 0; j < m; ++j) p *= x + Rational(static_cast<long>(j));
  return p;
}

Rational falling_factorial(const Rational& x, unsigned m) {
  Rational p(1);
  for (unsigned j = 0; j < m; ++j) p *= x - Rational(static_cast<long>(j));
  return p;
}

std::ostream& operator<<(std::ostream& os, const Rational& x) { return os << x.str(); }

}  // namespace ttw4d
