#include "nilchar/lie_algebra.hpp"

#include <algorithm>
#include <set>

#include "nilchar/errors.hpp"
#include "nilchar/subspace.hpp"

namespace nilchar {

namespace {

SparseVector to_sparse(const QVector& v) {
  SparseVector out;
  for (std::size_t k = 0; k < v.size(); ++k)
    if (!v[k].is_zero()) out.emplace_back(k, v[k]);
  return out;
}

}  // namespace

LieAlgebra::LieAlgebra(std::string name, std::vector<std::string> basis_names)
    : name_(std::move(name)), names_(std::move(basis_names)) {
  if (names_.empty()) throw MathError("Lie algebra must have positive dimension");
  std::set<std::string> seen(names_.begin(), names_.end());
  if (seen.size() != names_.size()) throw MathError("duplicate basis names in Lie algebra '" + name_ + "'");
  table_.assign(names_.size() * names_.size(), {});
}

LieAlgebra LieAlgebra::from_structure_constants(std::string name, std::vector<std::string> basis_names,
                                                const std::vector<std::vector<QVector>>& c) {
  LieAlgebra out(std::move(name), std::move(basis_names));
  const std::size_t n = out.dim();
  if (c.size() != n) throw MathError("structure constants have wrong shape");
  for (std::size_t i = 0; i < n; ++i) {
    if (c[i].size() != n) throw MathError("structure constants have wrong shape");
    for (std::size_t j = 0; j < n; ++j) {
      if (c[i][j].size() != n) throw MathError("structure constants have wrong shape");
      out.table_[i * n + j] = to_sparse(c[i][j]);
    }
  }
  return out;
}

void LieAlgebra::set_bracket(std::size_t i, std::size_t j, const QVector& value) {
  const std::size_t n = dim();
  if (i >= n || j >= n || value.size() != n) throw MathError("set_bracket: dimension mismatch");
  if (i == j) {
    if (std::any_of(value.begin(), value.end(), [](const Rational& r) { return !r.is_zero(); }))
      throw MathError("bracket [" + names_[i] + "," + names_[i] + "] must vanish (antisymmetry)");
    return;
  }
  table_[i * n + j] = to_sparse(value);
  QVector neg(n);
  for (std::size_t k = 0; k < n; ++k) neg[k] = -value[k];
  table_[j * n + i] = to_sparse(neg);
}

std::optional<std::size_t> LieAlgebra::index_of(const std::string& basis_name) const {
  auto it = std::find(names_.begin(), names_.end(), basis_name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - names_.begin());
}

QVector LieAlgebra::bracket(const QVector& v, const QVector& w) const {
  const std::size_t n = dim();
  if (v.size() != n || w.size() != n) throw MathError("bracket: dimension mismatch");
  QVector out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (v[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (w[j].is_zero()) continue;
      const Rational vw = v[i] * w[j];
      for (const auto& [k, c] : bracket_basis(i, j)) out[k] += vw * c;
    }
  }
  return out;
}

QMatrix LieAlgebra::ad(const QVector& v) const {
  const std::size_t n = dim();
  QMatrix m(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    const QVector col = bracket(v, unit(j));
    for (std::size_t i = 0; i < n; ++i) m(i, j) = col[i];
  }
  return m;
}

bool LieAlgebra::is_abelian() const {
  return std::all_of(table_.begin(), table_.end(), [](const SparseVector& s) { return s.empty(); });
}

QVector LieAlgebra::unit(std::size_t i) const {
  QVector v(dim());
  v.at(i) = Rational::one();
  return v;
}

LieAlgebra LieAlgebra::in_basis(const QMatrix& basis, std::vector<std::string> new_names) const {
  const std::size_t n = dim();
  if (basis.rows() != n || basis.cols() != n || new_names.size() != n)
    throw MathError("in_basis: basis must be square of the algebra's dimension");
  // Coordinates of v in the new basis: solve basis^T c = v.
  const QMatrix to_new = inverse(basis.transpose());
  LieAlgebra out(name_, std::move(new_names));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      const QVector br = bracket(basis.row(a), basis.row(b));
      out.set_bracket(a, b, to_new * std::span<const Rational>(br));
    }
  return out;
}

std::string LieAlgebra::format(const QVector& v) const {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    const Rational mag = v[i].sign() < 0 ? -v[i] : v[i];
    if (out.empty())
      out += v[i].sign() < 0 ? "-" : "";
    else
      out += v[i].sign() < 0 ? " - " : " + ";
    if (!mag.is_one()) out += mag.to_string() + "*";
    out += names_[i];
  }
  return out.empty() ? "0" : out;
}

ValidationReport validate(const LieAlgebra& algebra) {
  ValidationReport report;
  const std::size_t n = algebra.dim();
  for (std::size_t i = 0; i < n && report.antisymmetric; ++i)
    for (std::size_t j = i; j < n; ++j) {
      const QVector a = algebra.bracket(algebra.unit(i), algebra.unit(j));
      const QVector b = algebra.bracket(algebra.unit(j), algebra.unit(i));
      bool ok = true;
      for (std::size_t k = 0; k < n; ++k) ok = ok && (a[k] + b[k]).is_zero();
      if (!ok) {
        report.antisymmetric = false;
        report.failure = "antisymmetry fails for [" + algebra.basis_names()[i] + "," +
                         algebra.basis_names()[j] + "]";
        break;
      }
    }

  for (std::size_t i = 0; i < n && report.jacobi; ++i)
    for (std::size_t j = 0; j < n && report.jacobi; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const QVector xi = algebra.unit(i), xj = algebra.unit(j), xk = algebra.unit(k);
        const QVector a = algebra.bracket(xi, algebra.bracket(xj, xk));
        const QVector b = algebra.bracket(xj, algebra.bracket(xk, xi));
        const QVector c = algebra.bracket(xk, algebra.bracket(xi, xj));
        bool ok = true;
        for (std::size_t m = 0; m < n; ++m) ok = ok && (a[m] + b[m] + c[m]).is_zero();
        if (!ok) {
          report.jacobi = false;
          if (report.failure.empty())
            report.failure = "Jacobi identity fails for (" + algebra.basis_names()[i] + "," +
                             algebra.basis_names()[j] + "," + algebra.basis_names()[k] + ")";
          break;
        }
      }

  // Lower central series C^1 = g, C^{k+1} = [g, C^k].
  Subspace current = Subspace::whole(n);
  report.lower_central_dims.push_back(n);
  while (true) {
    std::vector<QVector> gens;
    for (std::size_t i = 0; i < n; ++i)
      for (const auto& v : current.basis()) gens.push_back(algebra.bracket(algebra.unit(i), v));
    Subspace next = Subspace::span(n, gens);
    if (next.dim() == current.dim()) break;
    report.lower_central_dims.push_back(next.dim());
    current = std::move(next);
    if (current.dim() == 0) break;
  }
  report.nilpotent = current.dim() == 0;
  report.nilpotency_class = report.nilpotent ? static_cast<int>(report.lower_central_dims.size()) - 1 : 0;
  return report;
}

std::vector<Rational> duflo_factor_traces(const LieAlgebra& algebra, const QVector& y, int kmax) {
  const QMatrix a = algebra.ad(y);
  QMatrix power = a;
  std::vector<Rational> traces;
  for (int k = 1; k <= kmax; ++k) {
    Rational tr;
    for (std::size_t i = 0; i < power.rows(); ++i) tr += power(i, i);
    traces.push_back(tr);
    power = power * a;
  }
  return traces;
}

}  // namespace nilchar
