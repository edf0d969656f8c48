#ifndef NILCHAR_PARAM_POLY_HPP
#define NILCHAR_PARAM_POLY_HPP

#include <string>
#include <utility>
#include <vector>

#include "nilchar/rational.hpp"

namespace nilchar {

/// Univariate polynomial in the parameter t over Q. Sparse: (degree, coefficient)
/// pairs with strictly increasing degrees and no stored zeros.
class ParamPoly {
 public:
  using Term = std::pair<unsigned, Rational>;

  ParamPoly() = default;
  ParamPoly(const Rational& c);  // NOLINT: constants embed implicitly
  ParamPoly(long c) : ParamPoly(Rational(c)) {}  // NOLINT
  explicit ParamPoly(std::vector<Term> terms);

  static ParamPoly t() { return monomial(1, Rational::one()); }
  static ParamPoly monomial(unsigned degree, const Rational& c);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first == 0); }
  /// Degree of the zero polynomial is reported as -1.
  int degree() const { return terms_.empty() ? -1 : static_cast<int>(terms_.back().first); }
  Rational leading() const { return terms_.empty() ? Rational() : terms_.back().second; }
  Rational coefficient(unsigned degree) const;
  Rational constant_term() const { return coefficient(0); }

  Rational evaluate(const Rational& t0) const;
  ParamPoly monic() const;
  /// Positive rational c with this = c * (primitive integer polynomial).
  Rational content() const;

  std::string to_string(const std::string& var = "t") const;

  ParamPoly& operator+=(const ParamPoly& o);
  ParamPoly& operator-=(const ParamPoly& o);
  ParamPoly& operator*=(const ParamPoly& o);
  ParamPoly& operator*=(const Rational& c);

  friend ParamPoly operator+(ParamPoly a, const ParamPoly& b) { return a += b; }
  friend ParamPoly operator-(ParamPoly a, const ParamPoly& b) { return a -= b; }
  friend ParamPoly operator*(ParamPoly a, const ParamPoly& b) { return a *= b; }
  friend ParamPoly operator*(ParamPoly a, const Rational& c) { return a *= c; }
  friend ParamPoly operator-(ParamPoly a) { return a *= Rational(-1); }
  friend bool operator==(const ParamPoly& a, const ParamPoly& b) { return a.terms_ == b.terms_; }

  static ParamPoly zero() { return ParamPoly(); }
  static ParamPoly one() { return ParamPoly(Rational::one()); }

 private:
  static ParamPoly from_dense(const std::vector<Rational>& dense);
  std::vector<Rational> dense() const;
  friend std::pair<ParamPoly, ParamPoly> divmod(const ParamPoly&, const ParamPoly&);

  std::vector<Term> terms_;
};

/// Euclidean division; throws MathError on a zero divisor.
std::pair<ParamPoly, ParamPoly> divmod(const ParamPoly& a, const ParamPoly& b);
/// Monic gcd (gcd(0, 0) = 0).
ParamPoly gcd(const ParamPoly& a, const ParamPoly& b);
ParamPoly lcm(const ParamPoly& a, const ParamPoly& b);
ParamPoly pow(const ParamPoly& base, unsigned exponent);
inline bool is_zero(const ParamPoly& p) { return p.is_zero(); }
inline std::string to_string(const ParamPoly& p) { return p.to_string(); }

/// Rational function num/den in t: gcd(num, den) = 1, den monic and nonzero.
class ParamRatFunc {
 public:
  ParamRatFunc() : den_(ParamPoly::one()) {}
  ParamRatFunc(const Rational& c) : num_(c), den_(ParamPoly::one()) {}  // NOLINT
  ParamRatFunc(long c) : ParamRatFunc(Rational(c)) {}  // NOLINT
  ParamRatFunc(const ParamPoly& p) : num_(p), den_(ParamPoly::one()) {}  // NOLINT
  ParamRatFunc(const ParamPoly& num, const ParamPoly& den);

  const ParamPoly& num() const { return num_; }
  const ParamPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }

  /// Throws MathError when t0 is a pole.
  Rational evaluate(const Rational& t0) const;
  std::string to_string(const std::string& var = "t") const;

  ParamRatFunc& operator+=(const ParamRatFunc& o);
  ParamRatFunc& operator-=(const ParamRatFunc& o);
  ParamRatFunc& operator*=(const ParamRatFunc& o);
  ParamRatFunc& operator/=(const ParamRatFunc& o);

  friend ParamRatFunc operator+(ParamRatFunc a, const ParamRatFunc& b) { return a += b; }
  friend ParamRatFunc operator-(ParamRatFunc a, const ParamRatFunc& b) { return a -= b; }
  friend ParamRatFunc operator*(ParamRatFunc a, const ParamRatFunc& b) { return a *= b; }
  friend ParamRatFunc operator/(ParamRatFunc a, const ParamRatFunc& b) { return a /= b; }
  friend ParamRatFunc operator-(const ParamRatFunc& a) { return ParamRatFunc(-a.num_, a.den_); }
  friend bool operator==(const ParamRatFunc& a, const ParamRatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  static ParamRatFunc zero() { return ParamRatFunc(); }
  static ParamRatFunc one() { return ParamRatFunc(Rational::one()); }

 private:
  void normalize();

  ParamPoly num_;
  ParamPoly den_;
};

inline bool is_zero(const ParamRatFunc& r) { return r.is_zero(); }
inline std::string to_string(const ParamRatFunc& r) { return r.to_string(); }

}  // namespace nilchar

#endif
