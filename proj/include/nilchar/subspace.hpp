#ifndef NILCHAR_SUBSPACE_HPP
#define NILCHAR_SUBSPACE_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "nilchar/matrix.hpp"

namespace nilchar {

class LieAlgebra;

/// Subspace of Q^n with an ordered basis. The basis order is meaningful: it fixes
/// the variable order of S(subspace) and of PBW frames built on it.
class Subspace {
 public:
  Subspace() = default;
  /// Throws MathError if the vectors are dependent or of the wrong length.
  Subspace(std::size_t ambient, std::vector<QVector> basis);

  /// Canonical (row-reduced) basis of the span of arbitrary vectors.
  static Subspace span(std::size_t ambient, const std::vector<QVector>& vectors);
  static Subspace whole(std::size_t ambient);
  static Subspace zero(std::size_t ambient) { return Subspace(ambient, {}); }

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<QVector>& basis() const { return basis_; }
  const QVector& operator[](std::size_t i) const { return basis_[i]; }

  bool contains(const QVector& v) const;
  bool contains(const Subspace& other) const;
  bool same_span(const Subspace& other) const { return contains(other) && other.contains(*this); }
  /// Coefficients of v in this basis, if v lies in the span.
  std::optional<QVector> coordinates(const QVector& v) const;

  Subspace sum(const Subspace& other) const;
  Subspace intersection(const Subspace& other) const;
  /// Linear functionals (as coefficient vectors) vanishing on the subspace.
  std::vector<QVector> annihilator() const;

 private:
  std::size_t ambient_ = 0;
  std::vector<QVector> basis_;
  QMatrix rref_;  // rref of basis rows, cached for membership tests
  std::vector<std::size_t> pivots_;
};

/// Subspace closed under the bracket of its parent algebra.
class Subalgebra {
 public:
  Subalgebra() = default;
  /// Throws MathError if not closed under the bracket.
  Subalgebra(const LieAlgebra& parent, Subspace space);

  const Subspace& space() const { return space_; }
  std::size_t dim() const { return space_.dim(); }
  const QVector& operator[](std::size_t i) const { return space_[i]; }

 private:
  Subspace space_;
};

/// Element of g*: values f(x_i) on the basis of g.
class LinearForm {
 public:
  LinearForm() = default;
  explicit LinearForm(QVector values) : values_(std::move(values)) {}
  static LinearForm zero(std::size_t n) { return LinearForm(QVector(n)); }

  const QVector& values() const { return values_; }
  std::size_t dim() const { return values_.size(); }
  Rational operator()(const QVector& v) const;
  LinearForm operator-() const;
  LinearForm scaled(const Rational& c) const;
  friend bool operator==(const LinearForm& a, const LinearForm& b) { return a.values_ == b.values_; }

 private:
  QVector values_;
};

/// Character lambda of a subalgebra h: values on the basis of h, with lambda([h,h]) = 0.
class CharacterFunctional {
 public:
  CharacterFunctional() = default;
  /// Throws MathError naming the first basis pair (i, j) with lambda([h_i, h_j]) != 0.
  CharacterFunctional(const LieAlgebra& parent, Subalgebra h, QVector values);

  const Subalgebra& subalgebra() const { return h_; }
  const QVector& values() const { return values_; }
  Rational operator()(const QVector& v) const;
  /// Some extension of lambda to g (zero on the greedy complement of h).
  LinearForm extension(const LieAlgebra& parent) const;

 private:
  Subalgebra h_;
  QVector values_;
};

/// Complement q with q + h = g. Preferred standard basis indices are used first
/// (error if dependent with h); remaining directions are filled greedily in index order.
Subspace complement(const LieAlgebra& algebra, const Subspace& h,
                    const std::optional<std::vector<std::size_t>>& preferred = std::nullopt);

/// Complete flag 0 = g_0 < g_1 < ... < g_n = g of ideals with dim g_i = i, refining
/// the ascending central series. Candidate directions are tried in the order
/// `preferred`, then the standard basis. Throws MathError if g is not nilpotent.
std::vector<Subspace> ideal_flag(const LieAlgebra& algebra, const std::vector<QVector>& preferred = {});

/// Ascending central series 0 < z_1 < z_2 < ... until stable.
std::vector<Subspace> ascending_central_series(const LieAlgebra& algebra);

bool is_ideal(const LieAlgebra& algebra, const Subspace& s);

}  // namespace nilchar

#endif
