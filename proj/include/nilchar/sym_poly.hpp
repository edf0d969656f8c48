#ifndef NILCHAR_SYM_POLY_HPP
#define NILCHAR_SYM_POLY_HPP

#include <cstddef>
#include <map>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "nilchar/errors.hpp"
#include "nilchar/matrix.hpp"
#include "nilchar/param_poly.hpp"
#include "nilchar/rational.hpp"

namespace nilchar {

using Exponents = std::vector<unsigned>;

inline unsigned total_degree(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0u); }

/// All exponent vectors in `vars` variables of total degree <= d, ordered by
/// degree and then lexicographically descending (x_0^d first within a degree).
std::vector<Exponents> monomials_up_to(std::size_t vars, unsigned d);

std::string format_monomial(const Exponents& e, const std::vector<std::string>& names, const char* sep = "*");

namespace detail {

/// Finite map exponent-vector -> nonzero coefficient, shared by PBW elements
/// and symmetric polynomials (which differ only in how products are formed).
template <class C>
class TermMap {
 public:
  using Terms = std::map<Exponents, C>;

  TermMap() = default;
  explicit TermMap(std::size_t vars) : vars_(vars) {}

  std::size_t vars() const { return vars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// -1 for the zero element.
  int degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(total_degree(e)));
    return d;
  }

  C coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? C::zero() : it->second;
  }

  void add_term(const Exponents& e, const C& c) {
    if (e.size() != vars_) throw MathError("term has wrong number of variables");
    if (is_zero_coeff(c)) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (is_zero_coeff(it->second)) terms_.erase(it);
    }
  }

  template <class D>
  void add_scaled(const TermMap<D>& other, const C& scale) {
    if (other.vars() != vars_) throw MathError("adding elements with different variable counts");
    if (is_zero_coeff(scale)) return;
    for (const auto& [e, c] : other.terms()) add_term(e, C(c) * scale);
  }

  void scale_by(const C& s) {
    if (is_zero_coeff(s)) {
      terms_.clear();
      return;
    }
    for (auto& [e, c] : terms_) c = c * s;
  }

  bool operator==(const TermMap& o) const { return vars_ == o.vars_ && terms_ == o.terms_; }

 protected:
  static bool is_zero_coeff(const C& c) {
    using nilchar::is_zero;
    return is_zero(c);
  }

  std::size_t vars_ = 0;
  Terms terms_;
};

}  // namespace detail

/// Element of a symmetric algebra S(V) on an ordered basis of V (commuting variables).
template <class C>
class SymPoly : public detail::TermMap<C> {
  using Base = detail::TermMap<C>;

 public:
  SymPoly() = default;
  explicit SymPoly(std::size_t vars) : Base(vars) {}

  static SymPoly constant(std::size_t vars, const C& c) {
    SymPoly p(vars);
    p.add_term(Exponents(vars, 0), c);
    return p;
  }
  static SymPoly monomial(const Exponents& e, const C& c = C::one()) {
    SymPoly p(e.size());
    p.add_term(e, c);
    return p;
  }
  static SymPoly variable(std::size_t vars, std::size_t i) {
    Exponents e(vars, 0);
    e.at(i) = 1;
    return monomial(e);
  }
  /// sum_i coeffs[i] * x_i
  static SymPoly linear(std::span<const C> coeffs) {
    SymPoly p(coeffs.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      Exponents e(coeffs.size(), 0);
      e[i] = 1;
      p.add_term(e, coeffs[i]);
    }
    return p;
  }

  SymPoly& operator+=(const SymPoly& o) {
    this->add_scaled(o, C::one());
    return *this;
  }
  SymPoly& operator-=(const SymPoly& o) {
    this->add_scaled(o, -C::one());
    return *this;
  }
  friend SymPoly operator+(SymPoly a, const SymPoly& b) { return a += b; }
  friend SymPoly operator-(SymPoly a, const SymPoly& b) { return a -= b; }
  friend SymPoly operator*(SymPoly a, const C& s) {
    a.scale_by(s);
    return a;
  }
  friend SymPoly operator*(const SymPoly& a, const SymPoly& b) {
    if (a.vars() != b.vars()) throw MathError("multiplying polynomials with different variable counts");
    SymPoly out(a.vars());
    for (const auto& [ea, ca] : a.terms())
      for (const auto& [eb, cb] : b.terms()) {
        Exponents e = ea;
        for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
        out.add_term(e, ca * cb);
      }
    return out;
  }

  /// d/dx_i applied `order` times.
  SymPoly derivative(std::size_t i, unsigned order = 1) const {
    SymPoly out(this->vars());
    for (const auto& [e, c] : this->terms()) {
      if (e[i] < order) continue;
      Exponents f = e;
      C factor = c;
      for (unsigned k = 0; k < order; ++k) factor = factor * C(Rational(static_cast<long>(e[i] - k)));
      f[i] -= order;
      out.add_term(f, factor);
    }
    return out;
  }

  /// Partial derivative with multi-index `alpha`.
  SymPoly derivative(const Exponents& alpha) const {
    SymPoly out = *this;
    for (std::size_t i = 0; i < alpha.size(); ++i)
      if (alpha[i] > 0) out = out.derivative(i, alpha[i]);
    return out;
  }

  /// Value at a point (one scalar per variable).
  template <class S>
  S evaluate(std::span<const S> point) const {
    if (point.size() != this->vars()) throw MathError("evaluation point has wrong dimension");
    S acc = S::zero();
    for (const auto& [e, c] : this->terms()) {
      S term = S(c);
      for (std::size_t i = 0; i < e.size(); ++i)
        for (unsigned k = 0; k < e[i]; ++k) term = term * point[i];
      acc += term;
    }
    return acc;
  }

  /// Substitutes x_i -> images[i] (polynomials in a common variable set).
  SymPoly substitute(const std::vector<SymPoly>& images) const {
    if (images.size() != this->vars()) throw MathError("substitution needs one image per variable");
    const std::size_t target = images.empty() ? 0 : images[0].vars();
    SymPoly out(target);
    for (const auto& [e, c] : this->terms()) {
      SymPoly term = SymPoly::constant(target, c);
      for (std::size_t i = 0; i < e.size(); ++i)
        for (unsigned k = 0; k < e[i]; ++k) term = term * images[i];
      out += term;
    }
    return out;
  }

  /// Homogeneous component of the given total degree.
  SymPoly component(unsigned degree) const {
    SymPoly out(this->vars());
    for (const auto& [e, c] : this->terms())
      if (total_degree(e) == degree) out.add_term(e, c);
    return out;
  }

  std::string to_string(const std::vector<std::string>& names) const;
};

/// Renders terms in decreasing degree, e.g. "V^2 - 2*U*Z + 1/3".
template <class C>
std::string format_terms(const detail::TermMap<C>& p, const std::vector<std::string>& names) {
  if (p.is_zero()) return "0";
  std::vector<std::pair<Exponents, C>> ordered(p.terms().begin(), p.terms().end());
  std::stable_sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
    const unsigned da = total_degree(a.first), db = total_degree(b.first);
    if (da != db) return da > db;
    return a.first > b.first;
  });
  std::string out;
  for (const auto& [e, c] : ordered) {
    std::string coeff = to_string(c);
    const bool constant = total_degree(e) == 0;
    // A coefficient that is itself a sum (e.g. a polynomial in t) gets parentheses.
    const bool compound = coeff.find(' ') != std::string::npos;
    const bool negative = !compound && !coeff.empty() && coeff[0] == '-';
    if (negative) coeff = coeff.substr(1);
    if (compound) coeff = "(" + coeff + ")";
    if (!out.empty()) out += negative ? " - " : " + ";
    else if (negative) out += "-";
    if (constant) {
      out += coeff;
    } else {
      if (coeff != "1") out += coeff + "*";
      out += format_monomial(e, names);
    }
  }
  return out;
}

template <class C>
std::string SymPoly<C>::to_string(const std::vector<std::string>& names) const {
  return format_terms(*this, names);
}

/// Evaluation at t = t0 of every coefficient.
SymPoly<Rational> specialize(const SymPoly<ParamPoly>& p, const Rational& t0);
SymPoly<Rational> specialize(const SymPoly<ParamRatFunc>& p, const Rational& t0);

}  // namespace nilchar

#endif
