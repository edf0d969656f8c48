#ifndef NILCHAR_LIE_ALGEBRA_HPP
#define NILCHAR_LIE_ALGEBRA_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nilchar/matrix.hpp"
#include "nilchar/rational.hpp"

namespace nilchar {

/// Sparse linear combination of basis vectors: (index, coefficient), sorted by index.
using SparseVector = std::vector<std::pair<std::size_t, Rational>>;

/// Finite-dimensional Lie algebra over Q given by structure constants on a named
/// basis: [x_i, x_j] = sum_k c[i][j][k] x_k.
///
/// Brackets of every ordered pair are stored, so that `validate` can detect
/// non-antisymmetric input coming from `from_structure_constants`.
class LieAlgebra {
 public:
  LieAlgebra() = default;
  LieAlgebra(std::string name, std::vector<std::string> basis_names);

  /// Dense constants c[i][j][k]; no symmetry is imposed.
  static LieAlgebra from_structure_constants(std::string name, std::vector<std::string> basis_names,
                                             const std::vector<std::vector<QVector>>& c);

  /// Sets [x_i, x_j] = value and [x_j, x_i] = -value.
  void set_bracket(std::size_t i, std::size_t j, const QVector& value);

  const std::string& name() const { return name_; }
  std::size_t dim() const { return names_.size(); }
  const std::vector<std::string>& basis_names() const { return names_; }
  std::optional<std::size_t> index_of(const std::string& basis_name) const;

  const SparseVector& bracket_basis(std::size_t i, std::size_t j) const { return table_[i * dim() + j]; }
  QVector bracket(const QVector& v, const QVector& w) const;
  /// Matrix of ad v in the basis (column j = [v, x_j]).
  QMatrix ad(const QVector& v) const;
  bool is_abelian() const;

  QVector unit(std::size_t i) const;

  /// The same algebra expressed in a new basis; rows of `basis` are the new basis
  /// vectors in current coordinates (must be invertible).
  LieAlgebra in_basis(const QMatrix& basis, std::vector<std::string> new_names) const;

  /// Renders a vector as a linear combination, e.g. "X - 3*U".
  std::string format(const QVector& v) const;

 private:
  std::string name_;
  std::vector<std::string> names_;
  std::vector<SparseVector> table_;
};

struct ValidationReport {
  bool antisymmetric = true;
  bool jacobi = true;
  bool nilpotent = false;
  /// Number of nonzero terms of the lower central series; 0 when not nilpotent.
  int nilpotency_class = 0;
  /// Dimensions of g, [g,g], [g,[g,g]], ... until stable.
  std::vector<std::size_t> lower_central_dims;
  std::string failure;
};

ValidationReport validate(const LieAlgebra& algebra);

/// Traces tr((ad Y)^k) for k = 1..kmax. log of the factor det(sinh(ad Y/2)/(ad Y/2))
/// is a series in these, so all-zero certifies that the factor is identically 1.
std::vector<Rational> duflo_factor_traces(const LieAlgebra& algebra, const QVector& y, int kmax);

}  // namespace nilchar

#endif
