#include "nilchar/subspace.hpp"

#include "nilchar/errors.hpp"
#include "nilchar/lie_algebra.hpp"

namespace nilchar {

Subspace::Subspace(std::size_t ambient, std::vector<QVector> basis)
    : ambient_(ambient), basis_(std::move(basis)) {
  for (const auto& v : basis_)
    if (v.size() != ambient_) throw MathError("subspace vector has wrong length");
  auto [r, p] = rref(QMatrix::from_rows(basis_, ambient_));
  if (p.size() != basis_.size()) throw MathError("subspace basis vectors are linearly dependent");
  rref_ = std::move(r);
  pivots_ = std::move(p);
}

Subspace Subspace::span(std::size_t ambient, const std::vector<QVector>& vectors) {
  auto [r, p] = rref(QMatrix::from_rows(vectors, ambient));
  std::vector<QVector> basis;
  for (std::size_t i = 0; i < p.size(); ++i) basis.push_back(r.row(i));
  return Subspace(ambient, std::move(basis));
}

Subspace Subspace::whole(std::size_t ambient) {
  std::vector<QVector> basis;
  for (std::size_t i = 0; i < ambient; ++i) {
    QVector e(ambient);
    e[i] = Rational::one();
    basis.push_back(std::move(e));
  }
  return Subspace(ambient, std::move(basis));
}

bool Subspace::contains(const QVector& v) const {
  if (v.size() != ambient_) throw MathError("membership test: dimension mismatch");
  // Eliminate v against the cached rref rows; v is in the span iff nothing remains.
  QVector w = v;
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    const Rational c = w[pivots_[i]];
    if (c.is_zero()) continue;
    for (std::size_t j = 0; j < ambient_; ++j)
      if (!rref_(i, j).is_zero()) w[j] -= c * rref_(i, j);
  }
  for (const auto& x : w)
    if (!x.is_zero()) return false;
  return true;
}

bool Subspace::contains(const Subspace& other) const {
  for (const auto& v : other.basis())
    if (!contains(v)) return false;
  return true;
}

std::optional<QVector> Subspace::coordinates(const QVector& v) const {
  if (!contains(v)) return std::nullopt;
  if (basis_.empty()) return QVector{};
  // Solve basis^T c = v restricted to the pivot coordinates of the rref.
  QMatrix a(ambient_, basis_.size() + 1);
  for (std::size_t j = 0; j < basis_.size(); ++j)
    for (std::size_t i = 0; i < ambient_; ++i) a(i, j) = basis_[j][i];
  for (std::size_t i = 0; i < ambient_; ++i) a(i, basis_.size()) = v[i];
  auto [r, p] = rref(std::move(a));
  QVector c(basis_.size());
  for (std::size_t i = 0; i < basis_.size(); ++i) c[i] = r(i, basis_.size());
  return c;
}

Subspace Subspace::sum(const Subspace& other) const {
  std::vector<QVector> all = basis_;
  all.insert(all.end(), other.basis_.begin(), other.basis_.end());
  return span(ambient_, all);
}

Subspace Subspace::intersection(const Subspace& other) const {
  const std::size_t a = dim(), b = other.dim();
  QMatrix m(ambient_, a + b);
  for (std::size_t i = 0; i < ambient_; ++i) {
    for (std::size_t j = 0; j < a; ++j) m(i, j) = basis_[j][i];
    for (std::size_t j = 0; j < b; ++j) m(i, a + j) = -other.basis_[j][i];
  }
  std::vector<QVector> vecs;
  for (const auto& kernel : nullspace(m)) {
    QVector v(ambient_);
    for (std::size_t j = 0; j < a; ++j)
      for (std::size_t i = 0; i < ambient_; ++i) v[i] += kernel[j] * basis_[j][i];
    vecs.push_back(std::move(v));
  }
  return span(ambient_, vecs);
}

std::vector<QVector> Subspace::annihilator() const {
  if (basis_.empty()) return Subspace::whole(ambient_).basis();
  return nullspace(QMatrix::from_rows(basis_, ambient_));
}

Subalgebra::Subalgebra(const LieAlgebra& parent, Subspace space) : space_(std::move(space)) {
  if (space_.ambient() != parent.dim()) throw MathError("subalgebra lives in the wrong ambient space");
  for (std::size_t i = 0; i < space_.dim(); ++i)
    for (std::size_t j = i + 1; j < space_.dim(); ++j)
      if (!space_.contains(parent.bracket(space_[i], space_[j])))
        throw MathError("subspace is not closed under the bracket: [" + parent.format(space_[i]) + ", " +
                        parent.format(space_[j]) + "] = " +
                        parent.format(parent.bracket(space_[i], space_[j])));
}

Rational LinearForm::operator()(const QVector& v) const {
  if (v.size() != values_.size()) throw MathError("linear form applied to a vector of wrong length");
  Rational acc;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero() && !values_[i].is_zero()) acc += v[i] * values_[i];
  return acc;
}

LinearForm LinearForm::operator-() const { return scaled(Rational(-1)); }

LinearForm LinearForm::scaled(const Rational& c) const {
  QVector out = values_;
  for (auto& x : out) x *= c;
  return LinearForm(std::move(out));
}

CharacterFunctional::CharacterFunctional(const LieAlgebra& parent, Subalgebra h, QVector values)
    : h_(std::move(h)), values_(std::move(values)) {
  if (values_.size() != h_.dim()) throw MathError("character needs one value per subalgebra basis vector");
  for (std::size_t i = 0; i < h_.dim(); ++i)
    for (std::size_t j = i + 1; j < h_.dim(); ++j) {
      const QVector br = parent.bracket(h_[i], h_[j]);
      if (!(*this)(br).is_zero())
        throw MathError("character does not vanish on [h,h]: lambda([" + parent.format(h_[i]) + ", " +
                        parent.format(h_[j]) + "]) = " + (*this)(br).to_string());
    }
}

Rational CharacterFunctional::operator()(const QVector& v) const {
  const auto c = h_.space().coordinates(v);
  if (!c) throw MathError("character evaluated outside its subalgebra");
  Rational acc;
  for (std::size_t i = 0; i < c->size(); ++i) acc += (*c)[i] * values_[i];
  return acc;
}

LinearForm CharacterFunctional::extension(const LieAlgebra& parent) const {
  const Subspace q = complement(parent, h_.space());
  const std::size_t n = parent.dim();
  // Rows: h basis then q basis; right-hand side: lambda values then zeros.
  QMatrix m(n, n);
  QVector rhs(n);
  for (std::size_t i = 0; i < h_.dim(); ++i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) = h_[i][j];
    rhs[i] = values_[i];
  }
  for (std::size_t i = 0; i < q.dim(); ++i)
    for (std::size_t j = 0; j < n; ++j) m(h_.dim() + i, j) = q[i][j];
  return LinearForm(solve(m, std::span<const Rational>(rhs)));
}

Subspace complement(const LieAlgebra& algebra, const Subspace& h,
                    const std::optional<std::vector<std::size_t>>& preferred) {
  const std::size_t n = algebra.dim();
  if (h.ambient() != n) throw MathError("complement: dimension mismatch");
  std::vector<QVector> chosen;
  std::vector<QVector> all = h.basis();
  auto try_add = [&](std::size_t i) {
    std::vector<QVector> trial = all;
    trial.push_back(algebra.unit(i));
    if (Subspace::span(n, trial).dim() != trial.size()) return false;
    all = std::move(trial);
    chosen.push_back(algebra.unit(i));
    return true;
  };
  if (preferred)
    for (auto i : *preferred) {
      if (i >= n) throw MathError("complement: preferred index out of range");
      if (!try_add(i))
        throw MathError("complement: preferred direction " + algebra.basis_names()[i] +
                        " is dependent on h and the other preferred directions");
    }
  for (std::size_t i = 0; i < n && all.size() < n; ++i) try_add(i);
  return Subspace(n, std::move(chosen));
}

std::vector<Subspace> ascending_central_series(const LieAlgebra& algebra) {
  const std::size_t n = algebra.dim();
  std::vector<Subspace> series;
  Subspace current = Subspace::zero(n);
  while (true) {
    // x in next iff ann(current) . ad(e_k) x = 0 for every basis vector e_k.
    const std::vector<QVector> ann = current.annihilator();
    std::vector<QVector> rows;
    for (std::size_t k = 0; k < n; ++k) {
      const QMatrix adk = algebra.ad(algebra.unit(k));
      for (const auto& nu : ann) {
        QVector row(n);
        for (std::size_t j = 0; j < n; ++j)
          for (std::size_t i = 0; i < n; ++i) row[j] += nu[i] * adk(i, j);
        rows.push_back(std::move(row));
      }
    }
    Subspace next = rows.empty() ? Subspace::whole(n) : Subspace::span(n, nullspace(QMatrix::from_rows(rows, n)));
    if (next.dim() == current.dim()) break;
    series.push_back(next);
    current = std::move(next);
    if (current.dim() == n) break;
  }
  return series;
}

std::vector<Subspace> ideal_flag(const LieAlgebra& algebra, const std::vector<QVector>& preferred) {
  const std::size_t n = algebra.dim();
  const auto series = ascending_central_series(algebra);
  if (series.empty() || series.back().dim() != n)
    throw MathError("ideal flag requires a nilpotent Lie algebra");

  std::vector<Subspace> flag{Subspace::zero(n)};
  std::vector<QVector> current;
  for (const auto& level : series) {
    std::vector<QVector> candidates = preferred;
    for (std::size_t i = 0; i < n; ++i) candidates.push_back(algebra.unit(i));
    candidates.insert(candidates.end(), level.basis().begin(), level.basis().end());
    for (const auto& c : candidates) {
      if (current.size() == level.dim()) break;
      if (c.size() != n || !level.contains(c)) continue;
      std::vector<QVector> trial = current;
      trial.push_back(c);
      if (Subspace::span(n, trial).dim() != trial.size()) continue;
      current = std::move(trial);
      flag.emplace_back(n, current);
    }
  }
  return flag;
}

bool is_ideal(const LieAlgebra& algebra, const Subspace& s) {
  for (std::size_t i = 0; i < algebra.dim(); ++i)
    for (const auto& v : s.basis())
      if (!s.contains(algebra.bracket(algebra.unit(i), v))) return false;
  return true;
}

}  // namespace nilchar
