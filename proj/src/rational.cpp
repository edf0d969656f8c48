#include "nilchar/rational.hpp"

#include <cctype>

#include "nilchar/errors.hpp"

namespace nilchar {

namespace {

bool valid_integer(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

mpz_class to_mpz(std::string_view s) {
  if (!s.empty() && s[0] == '+') s.remove_prefix(1);
  return mpz_class(std::string(s), 10);
}

}  // namespace

Rational::Rational(long n, long d) : v_(n, d) {
  if (d == 0) throw MathError("rational with zero denominator");
  v_.canonicalize();
}

Rational::Rational(const mpz_class& n, const mpz_class& d) : v_(n, d) {
  if (d == 0) throw MathError("rational with zero denominator");
  v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  const std::string_view s = trim(text);
  const auto slash = s.find('/');
  if (slash == std::string_view::npos) {
    if (!valid_integer(s)) throw MathError("malformed rational '" + std::string(s) + "'");
    return Rational(to_mpz(s), mpz_class(1));
  }
  const auto num = trim(s.substr(0, slash));
  const auto den = trim(s.substr(slash + 1));
  if (!valid_integer(num) || !valid_integer(den) || den[0] == '-')
    throw MathError("malformed rational '" + std::string(s) + "'");
  const mpz_class d = to_mpz(den);
  if (d == 0) throw MathError("rational with zero denominator '" + std::string(s) + "'");
  return Rational(to_mpz(num), d);
}

std::string Rational::to_string() const {
  if (v_.get_den() == 1) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw MathError("division by zero rational");
  v_ /= o.v_;
  return *this;
}

Rational pow(const Rational& base, unsigned exponent) {
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), base.raw().get_num_mpz_t(), exponent);
  mpz_pow_ui(d.get_mpz_t(), base.raw().get_den_mpz_t(), exponent);
  return Rational(n, d);
}

Rational inverse(const Rational& r) { return Rational::one() / r; }

}  // namespace nilchar
