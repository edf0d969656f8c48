#include "nilchar/param_poly.hpp"

#include <algorithm>
#include <map>

#include "nilchar/errors.hpp"

namespace nilchar {

ParamPoly::ParamPoly(const Rational& c) {
  if (!c.is_zero()) terms_.emplace_back(0u, c);
}

ParamPoly::ParamPoly(std::vector<Term> terms) {
  std::map<unsigned, Rational> acc;
  for (auto& [d, c] : terms) acc[d] += c;
  for (auto& [d, c] : acc)
    if (!c.is_zero()) terms_.emplace_back(d, c);
}

ParamPoly ParamPoly::monomial(unsigned degree, const Rational& c) {
  ParamPoly p;
  if (!c.is_zero()) p.terms_.emplace_back(degree, c);
  return p;
}

Rational ParamPoly::coefficient(unsigned degree) const {
  for (const auto& [d, c] : terms_)
    if (d == degree) return c;
  return Rational();
}

Rational ParamPoly::evaluate(const Rational& t0) const {
  Rational acc;
  unsigned at = terms_.empty() ? 0 : terms_.back().first;
  // Horner over the sparse terms, highest degree first.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    acc *= pow(t0, at - it->first);
    acc += it->second;
    at = it->first;
  }
  return acc * pow(t0, at);
}

ParamPoly ParamPoly::monic() const {
  if (terms_.empty()) return *this;
  return *this * inverse(leading());
}

Rational ParamPoly::content() const {
  if (terms_.empty()) return Rational::one();
  mpz_class g = 0, l = 1;
  for (const auto& [d, c] : terms_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.raw().get_num_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.raw().get_den_mpz_t());
  }
  return Rational(abs(g), l);
}

std::string ParamPoly::to_string(const std::string& var) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [d, c] = *it;
    Rational mag = c.sign() < 0 ? -c : c;
    if (out.empty()) {
      if (c.sign() < 0) out += "-";
    } else {
      out += c.sign() < 0 ? " - " : " + ";
    }
    if (d == 0) {
      out += mag.to_string();
      continue;
    }
    if (!mag.is_one()) out += mag.to_string() + "*";
    out += var;
    if (d > 1) out += "^" + std::to_string(d);
  }
  return out;
}

std::vector<Rational> ParamPoly::dense() const {
  std::vector<Rational> out(terms_.empty() ? 0 : terms_.back().first + 1);
  for (const auto& [d, c] : terms_) out[d] = c;
  return out;
}

ParamPoly ParamPoly::from_dense(const std::vector<Rational>& dense) {
  ParamPoly p;
  for (unsigned d = 0; d < dense.size(); ++d)
    if (!dense[d].is_zero()) p.terms_.emplace_back(d, dense[d]);
  return p;
}

ParamPoly& ParamPoly::operator+=(const ParamPoly& o) {
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() || (a != terms_.end() && a->first < b->first)) {
      out.push_back(*a++);
    } else if (a == terms_.end() || b->first < a->first) {
      out.push_back(*b++);
    } else {
      Rational s = a->second + b->second;
      if (!s.is_zero()) out.emplace_back(a->first, std::move(s));
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
  return *this;
}

ParamPoly& ParamPoly::operator-=(const ParamPoly& o) { return *this += -o; }

ParamPoly& ParamPoly::operator*=(const ParamPoly& o) {
  std::map<unsigned, Rational> acc;
  for (const auto& [da, ca] : terms_)
    for (const auto& [db, cb] : o.terms_) acc[da + db] += ca * cb;
  terms_.clear();
  for (auto& [d, c] : acc)
    if (!c.is_zero()) terms_.emplace_back(d, c);
  return *this;
}

ParamPoly& ParamPoly::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& term : terms_) term.second *= c;
  return *this;
}

std::pair<ParamPoly, ParamPoly> divmod(const ParamPoly& a, const ParamPoly& b) {
  if (b.is_zero()) throw MathError("polynomial division by zero");
  std::vector<Rational> rem = a.dense();
  const std::vector<Rational> div = b.dense();
  const std::size_t db = div.size() - 1;
  if (rem.size() < div.size()) return {ParamPoly(), a};
  std::vector<Rational> quo(rem.size() - db);
  const Rational lead_inv = inverse(div.back());
  for (std::size_t i = rem.size(); i-- > db;) {
    if (rem[i].is_zero()) continue;
    const Rational f = rem[i] * lead_inv;
    quo[i - db] = f;
    for (std::size_t j = 0; j <= db; ++j) rem[i - db + j] -= f * div[j];
  }
  return {ParamPoly::from_dense(quo), ParamPoly::from_dense(rem)};
}

ParamPoly gcd(const ParamPoly& a, const ParamPoly& b) {
  ParamPoly x = a, y = b;
  while (!y.is_zero()) {
    ParamPoly r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

ParamPoly lcm(const ParamPoly& a, const ParamPoly& b) {
  if (a.is_zero() || b.is_zero()) return ParamPoly();
  return divmod(a * b, gcd(a, b)).first.monic();
}

ParamPoly pow(const ParamPoly& base, unsigned exponent) {
  ParamPoly out = ParamPoly::one();
  for (unsigned i = 0; i < exponent; ++i) out *= base;
  return out;
}

ParamRatFunc::ParamRatFunc(const ParamPoly& num, const ParamPoly& den) : num_(num), den_(den) {
  if (den_.is_zero()) throw MathError("rational function with zero denominator");
  normalize();
}

void ParamRatFunc::normalize() {
  if (num_.is_zero()) {
    den_ = ParamPoly::one();
    return;
  }
  const ParamPoly g = gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = divmod(num_, g).first;
    den_ = divmod(den_, g).first;
  }
  const Rational lead = den_.leading();
  if (!lead.is_one()) {
    const Rational inv = inverse(lead);
    num_ *= inv;
    den_ *= inv;
  }
}

Rational ParamRatFunc::evaluate(const Rational& t0) const {
  const Rational d = den_.evaluate(t0);
  if (d.is_zero()) throw MathError("rational function has a pole at t = " + t0.to_string());
  return num_.evaluate(t0) / d;
}

std::string ParamRatFunc::to_string(const std::string& var) const {
  if (den_.degree() == 0) return num_.to_string(var);
  auto wrap = [&](const ParamPoly& p) {
    std::string s = p.to_string(var);
    return p.terms().size() > 1 ? "(" + s + ")" : s;
  };
  return wrap(num_) + "/" + wrap(den_);
}

ParamRatFunc& ParamRatFunc::operator+=(const ParamRatFunc& o) {
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
  }
  normalize();
  return *this;
}

ParamRatFunc& ParamRatFunc::operator-=(const ParamRatFunc& o) { return *this += -o; }

ParamRatFunc& ParamRatFunc::operator*=(const ParamRatFunc& o) {
  num_ *= o.num_;
  den_ *= o.den_;
  normalize();
  return *this;
}

ParamRatFunc& ParamRatFunc::operator/=(const ParamRatFunc& o) {
  if (o.is_zero()) throw MathError("division by zero rational function");
  num_ *= o.den_;
  den_ *= o.num_;
  normalize();
  return *this;
}

}  // namespace nilchar
