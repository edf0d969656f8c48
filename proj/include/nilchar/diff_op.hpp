#ifndef NILCHAR_DIFF_OP_HPP
#define NILCHAR_DIFF_OP_HPP

#include <map>
#include <string>
#include <vector>

#include "nilchar/errors.hpp"
#include "nilchar/sym_poly.hpp"

namespace nilchar {

/// Differential operator sum_alpha a_alpha(x) d^alpha on S(V), coefficients written
/// to the left of the derivatives. Scalars S are Rational, or ParamRatFunc when the
/// operator depends on a symbolic evaluation parameter.
template <class S>
class PolyDiffOp {
 public:
  explicit PolyDiffOp(std::size_t vars = 0) : vars_(vars) {}

  static PolyDiffOp identity(std::size_t vars) { return term(SymPoly<S>::constant(vars, S::one()), Exponents(vars, 0)); }
  static PolyDiffOp term(const SymPoly<S>& coeff, const Exponents& alpha) {
    PolyDiffOp op(coeff.vars());
    op.add(alpha, coeff);
    return op;
  }

  std::size_t vars() const { return vars_; }
  const std::map<Exponents, SymPoly<S>>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(const Exponents& alpha, const SymPoly<S>& coeff) {
    if (alpha.size() != vars_ || coeff.vars() != vars_) throw MathError("operator term has wrong number of variables");
    auto [it, inserted] = terms_.try_emplace(alpha, coeff);
    if (!inserted) it->second = it->second + coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }

  SymPoly<S> apply(const SymPoly<S>& p) const {
    SymPoly<S> out(vars_);
    for (const auto& [alpha, a] : terms_) {
      const SymPoly<S> d = p.derivative(alpha);
      if (!d.is_zero()) out = out + a * d;
    }
    return out;
  }

  friend PolyDiffOp operator+(PolyDiffOp a, const PolyDiffOp& b) {
    for (const auto& [alpha, c] : b.terms_) a.add(alpha, c);
    return a;
  }
  friend PolyDiffOp operator*(PolyDiffOp a, const S& s) {
    PolyDiffOp out(a.vars_);
    for (const auto& [alpha, c] : a.terms_) out.add(alpha, c * s);
    return out;
  }
  friend PolyDiffOp operator-(const PolyDiffOp& a) { return a * (-S::one()); }

  /// Composition (A B)(p) = A(B(p)), normal-ordered by the Leibniz rule:
  /// d^alpha b = sum_{gamma <= alpha} binom(alpha, gamma) (d^gamma b) d^(alpha - gamma).
  friend PolyDiffOp operator*(const PolyDiffOp& a, const PolyDiffOp& b) {
    PolyDiffOp out(a.vars_);
    for (const auto& [alpha, ca] : a.terms_)
      for (const auto& [beta, cb] : b.terms_) {
        Exponents gamma(a.vars_, 0);
        for (;;) {
          Rational binom = Rational::one();
          Exponents rest = beta;
          for (std::size_t i = 0; i < gamma.size(); ++i) {
            for (unsigned k = 0; k < gamma[i]; ++k) binom = binom * Rational(static_cast<long>(alpha[i] - k)) / Rational(static_cast<long>(k + 1));
            rest[i] += alpha[i] - gamma[i];
          }
          const SymPoly<S> db = cb.derivative(gamma);
          if (!db.is_zero()) out.add(rest, (ca * db) * S(binom));
          std::size_t i = 0;
          while (i < gamma.size() && gamma[i] == alpha[i]) gamma[i++] = 0;
          if (i == gamma.size()) break;
          ++gamma[i];
        }
      }
    return out;
  }

  /// Drops terms of derivative order > d, which vanish on S_{<=d}.
  PolyDiffOp truncated(unsigned d) const {
    PolyDiffOp out(vars_);
    for (const auto& [alpha, c] : terms_)
      if (total_degree(alpha) <= d) out.add(alpha, c);
    return out;
  }

  std::string to_string(const std::vector<std::string>& names) const {
    std::string out;
    for (const auto& [alpha, c] : terms_) {
      if (!out.empty()) out += " + ";
      const bool pure = total_degree(alpha) == 0;
      out += "(" + c.to_string(names) + ")";
      if (pure) continue;
      for (std::size_t i = 0; i < alpha.size(); ++i)
        if (alpha[i]) out += "*d_" + names[i] + (alpha[i] > 1 ? "^" + std::to_string(alpha[i]) : "");
    }
    return out.empty() ? "0" : out;
  }

 private:
  std::size_t vars_;
  std::map<Exponents, SymPoly<S>> terms_;
};

/// exp(A) = sum_k A^k / k!, exact on S_{<=d}. Requires every term a d^alpha of A
/// to lower degree (alpha != 0 and deg a < |alpha|), so that A^{d+1} = 0 on S_{<=d}.
template <class S>
PolyDiffOp<S> exp_diff_op(const PolyDiffOp<S>& a, unsigned d) {
  for (const auto& [alpha, c] : a.terms()) {
    const unsigned order = total_degree(alpha);
    if (order == 0) throw MathError("exponential of an operator with a derivative-free term does not terminate");
    if (c.degree() >= static_cast<int>(order))
      throw MathError("exponential needs a degree-lowering operator (each coefficient degree below its order)");
  }
  const PolyDiffOp<S> step = a.truncated(d);
  PolyDiffOp<S> power = PolyDiffOp<S>::identity(a.vars());
  PolyDiffOp<S> sum = power;
  Rational factorial = Rational::one();
  for (unsigned k = 1; k <= d; ++k) {
    power = (power * step).truncated(d);
    if (power.is_zero()) break;
    factorial = factorial * Rational(static_cast<long>(k));
    sum = sum + power * S(Rational::one() / factorial);
  }
  return sum;
}

}  // namespace nilchar

#endif
