#include "nilchar/enveloping.hpp"

#include <algorithm>

namespace nilchar {

Frame::Frame(const LieAlgebra& g, QMatrix basis, std::vector<std::string> names)
    : basis_(std::move(basis)),
      to_frame_(inverse(basis_.transpose())),
      algebra_(g.in_basis(basis_, std::move(names))) {}

Frame Frame::identity(const LieAlgebra& g) {
  return Frame(g, QMatrix::identity(g.dim()), g.basis_names());
}

Frame Frame::from_order(const LieAlgebra& g, const BasisOrder& order) {
  const std::size_t n = g.dim();
  std::vector<bool> seen(n, false);
  if (order.size() != n) throw MathError("basis order has wrong length");
  QMatrix basis(n, n);
  std::vector<std::string> names;
  for (std::size_t p = 0; p < n; ++p) {
    if (order[p] >= n || seen[order[p]]) throw MathError("basis order is not a permutation");
    seen[order[p]] = true;
    basis(p, order[p]) = Rational::one();
    names.push_back(g.basis_names()[order[p]]);
  }
  return Frame(g, std::move(basis), std::move(names));
}

QVector Frame::to_frame(const QVector& v) const { return to_frame_ * std::span<const Rational>(v); }

QVector Frame::to_parent(const QVector& c) const {
  return basis_.transpose() * std::span<const Rational>(c);
}

Enveloping::Enveloping(LieAlgebra algebra) : algebra_(std::move(algebra)) {}

std::shared_ptr<const PBWElement<Rational>> Enveloping::times_generator(const Exponents& m, std::size_t k) const {
  auto key = std::make_pair(m, k);
  {
    std::lock_guard lock(mutex_);
    auto it = product_cache_.find(key);
    if (it != product_cache_.end()) return it->second;
  }

  std::size_t last = dim();
  for (std::size_t i = dim(); i-- > 0;)
    if (m[i] > 0) {
      last = i;
      break;
    }

  auto result = std::make_shared<PBWElement<Rational>>(dim());
  if (last == dim() || last <= k) {
    Exponents e = m;
    ++e[k];
    result->add_term(e, Rational::one());
  } else {
    // x^m x_k = x^{m'} x_last x_k = (x^{m'} x_k) x_last + x^{m'} [x_last, x_k]
    Exponents rest = m;
    --rest[last];
    for (const auto& [e, c] : times_generator(rest, k)->terms()) result->add_scaled(*times_generator(e, last), c);
    for (const auto& [j, c] : algebra_.bracket_basis(last, k)) result->add_scaled(*times_generator(rest, j), c);
  }

  std::lock_guard lock(mutex_);
  return product_cache_.try_emplace(std::move(key), std::move(result)).first->second;
}

PBWElement<Rational> Enveloping::monomial_product(const Exponents& a, const Exponents& b) const {
  PBWElement<Rational> cur = PBWElement<Rational>::monomial(a);
  for (std::size_t k = 0; k < b.size(); ++k)
    for (unsigned r = 0; r < b[k]; ++r) {
      PBWElement<Rational> next(dim());
      for (const auto& [e, c] : cur.terms()) next.add_scaled(*times_generator(e, k), c);
      cur = std::move(next);
    }
  return cur;
}

PBWElement<Rational> Enveloping::straighten(std::span<const std::size_t> word) const {
  PBWElement<Rational> cur = one();
  for (auto k : word) {
    if (k >= dim()) throw MathError("straighten: generator index out of range");
    PBWElement<Rational> next(dim());
    for (const auto& [e, c] : cur.terms()) next.add_scaled(*times_generator(e, k), c);
    cur = std::move(next);
  }
  return cur;
}

PBWElement<Rational> Enveloping::symmetrize_monomial(const Exponents& m) const {
  {
    std::lock_guard lock(mutex_);
    auto it = sym_cache_.find(m);
    if (it != sym_cache_.end()) return *it->second;
  }
  std::vector<std::size_t> word;
  for (std::size_t i = 0; i < m.size(); ++i) word.insert(word.end(), m[i], i);
  auto out = std::make_shared<PBWElement<Rational>>(dim());
  long count = 0;
  do {
    out->add_scaled(straighten(word), Rational::one());
    ++count;
  } while (std::next_permutation(word.begin(), word.end()));
  out->scale_by(Rational(1, count));
  std::lock_guard lock(mutex_);
  return *sym_cache_.try_emplace(m, std::move(out)).first->second;
}

PBWElement<Rational> Enveloping::generator(std::size_t i) const {
  Exponents e(dim(), 0);
  e.at(i) = 1;
  return PBWElement<Rational>::monomial(e);
}

PBWElement<Rational> Enveloping::element(const QVector& v) const {
  if (v.size() != dim()) throw MathError("element: dimension mismatch");
  PBWElement<Rational> out(dim());
  for (std::size_t i = 0; i < dim(); ++i)
    if (!v[i].is_zero()) out.add_scaled(generator(i), v[i]);
  return out;
}

PBWElement<Rational> straighten(const LieAlgebra& algebra, const BasisOrder& order,
                                std::span<const std::size_t> word, const Rational& coeff) {
  const Frame frame = Frame::from_order(algebra, order);
  std::vector<std::size_t> position(order.size());
  for (std::size_t p = 0; p < order.size(); ++p) position[order[p]] = p;
  std::vector<std::size_t> mapped;
  for (auto k : word) {
    if (k >= position.size()) throw MathError("straighten: generator index out of range");
    mapped.push_back(position[k]);
  }
  Enveloping engine(frame.algebra());
  return engine.straighten(mapped) * coeff;
}

}  // namespace nilchar
