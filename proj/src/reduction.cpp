#include "nilchar/reduction.hpp"

namespace nilchar {

namespace {

std::string display_name(const LieAlgebra& g, const QVector& v) {
  std::string s = g.format(v);
  return s.find(' ') == std::string::npos ? s : "(" + s + ")";
}

std::shared_ptr<const Frame> make_frame(const LieAlgebra& g, const Subspace& q, const Subalgebra& h) {
  const std::size_t n = g.dim();
  if (q.ambient() != n || h.space().ambient() != n) throw MathError("quotient context: dimension mismatch");
  if (q.dim() + h.dim() != n || q.sum(h.space()).dim() != n)
    throw MathError("quotient context: q is not a complement of h (q + h must be direct and equal g)");
  QMatrix basis(n, n);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < q.dim(); ++i) {
    for (std::size_t j = 0; j < n; ++j) basis(i, j) = q[i][j];
    names.push_back(display_name(g, q[i]));
  }
  for (std::size_t i = 0; i < h.dim(); ++i) {
    for (std::size_t j = 0; j < n; ++j) basis(q.dim() + i, j) = h[i][j];
    names.push_back(display_name(g, h[i]));
  }
  return std::make_shared<const Frame>(g, std::move(basis), std::move(names));
}

/// Columns of the invariance system: one per monomial of S(q)_{<=d}, each a map
/// from (h index, q-monomial) to the coefficient of reduce(ad H_j beta_q(x^a)).
template <class C>
std::vector<std::map<std::pair<std::size_t, Exponents>, C>> invariance_columns(
    const QuotientContext& ctx, const std::vector<Exponents>& monomials, std::span<const C> h_values) {
  std::vector<std::map<std::pair<std::size_t, Exponents>, C>> cols;
  for (const auto& m : monomials) {
    std::map<std::pair<std::size_t, Exponents>, C> col;
    const auto p = SymPoly<C>::monomial(m);
    for (std::size_t j = 0; j < ctx.h_dim(); ++j)
      {
        const auto defect = ctx.invariance_defect(p, j, h_values);
        for (const auto& [e, c] : defect.terms()) col.emplace(std::make_pair(j, e), c);
      }
    cols.push_back(std::move(col));
  }
  return cols;
}

template <class F, class C>
Matrix<F> assemble(const std::vector<std::map<std::pair<std::size_t, Exponents>, C>>& cols) {
  std::map<std::pair<std::size_t, Exponents>, std::size_t> row_of;
  for (const auto& col : cols)
    for (const auto& [key, c] : col) row_of.try_emplace(key, 0);
  std::size_t r = 0;
  for (auto& [key, idx] : row_of) idx = r++;
  Matrix<F> m(row_of.size(), cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (const auto& [key, c] : cols[j]) m(row_of.at(key), j) = F(c);
  return m;
}

}  // namespace

QuotientContext::QuotientContext(LieAlgebra g, CharacterFunctional lambda, Subspace q)
    : g_(std::move(g)), lambda_(std::move(lambda)), q_(std::move(q)) {
  frame_ = make_frame(g_, q_, lambda_.subalgebra());
  engine_ = std::make_shared<const Enveloping>(frame_->algebra());
}

std::vector<std::string> QuotientContext::q_names() const {
  return std::vector<std::string>(frame_->names().begin(),
                                  frame_->names().begin() + static_cast<std::ptrdiff_t>(q_dim()));
}

std::vector<ParamPoly> QuotientContext::family_values() const {
  std::vector<ParamPoly> out;
  for (const auto& v : lambda_.values()) out.push_back(ParamPoly::t() * v);
  return out;
}

bool QuotientContext::is_invariant(const SymPoly<Rational>& p) const {
  const auto values = lambda_values<Rational>();
  for (std::size_t j = 0; j < h_dim(); ++j)
    if (!invariance_defect<Rational>(p, j, values).is_zero()) return false;
  return true;
}

QMatrix QuotientContext::images_in(const QuotientContext& other) const {
  if (other.dim() != dim()) throw MathError("contexts over different algebras");
  QMatrix images(dim(), dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    const QVector c = other.frame().to_frame(frame_->basis().row(i));
    for (std::size_t j = 0; j < dim(); ++j) images(i, j) = c[j];
  }
  return images;
}

InvariantBasis invariants(const QuotientContext& ctx, unsigned degree) {
  const auto monomials = monomials_up_to(ctx.q_dim(), degree);
  const auto values = ctx.lambda_values<Rational>();
  const auto cols = invariance_columns<Rational>(ctx, monomials, values);
  const auto system = assemble<Rational>(cols);
  InvariantBasis out{degree, {}};
  const auto kernel = system.rows() == 0 ? nullspace(QMatrix(0, monomials.size())) : nullspace(system);
  for (const auto& v : kernel) {
    SymPoly<Rational> p(ctx.q_dim());
    for (std::size_t i = 0; i < v.size(); ++i) p.add_term(monomials[i], v[i]);
    out.elements.push_back(std::move(p));
  }
  return out;
}

FamilyBasis invariants_family(const QuotientContext& ctx, unsigned degree) {
  const auto monomials = monomials_up_to(ctx.q_dim(), degree);
  const auto values = ctx.family_values();
  const auto cols = invariance_columns<ParamPoly>(ctx, monomials, values);
  const auto system = assemble<ParamRatFunc>(cols);
  FamilyBasis out{degree, {}};
  const auto kernel = system.rows() == 0 ? nullspace(Matrix<ParamRatFunc>(0, monomials.size())) : nullspace(system);
  for (const auto& v : kernel) {
    const auto poly = clear_denominators(v);
    SymPoly<ParamPoly> p(ctx.q_dim());
    for (std::size_t i = 0; i < poly.size(); ++i) p.add_term(monomials[i], poly[i]);
    out.elements.push_back(std::move(p));
  }
  return out;
}

std::size_t polynomial_rank(const std::vector<SymPoly<Rational>>& polys) {
  std::map<Exponents, std::size_t> col_of;
  for (const auto& p : polys)
    for (const auto& [e, c] : p.terms()) col_of.try_emplace(e, 0);
  std::size_t k = 0;
  for (auto& [e, idx] : col_of) idx = k++;
  QMatrix m(polys.size(), col_of.size());
  for (std::size_t i = 0; i < polys.size(); ++i)
    for (const auto& [e, c] : polys[i].terms()) m(i, col_of.at(e)) = c;
  return rank(m);
}

std::vector<SymPoly<Rational>> specialize(const FamilyBasis& family, const Rational& t0) {
  std::vector<SymPoly<Rational>> out;
  for (const auto& p : family.elements) {
    SymPoly<Rational> s = specialize(p, t0);
    if (s.is_zero()) continue;
    out.push_back(std::move(s));
    if (polynomial_rank(out) < out.size()) out.pop_back();
  }
  return out;
}

SymPoly<Rational> quotient_product(const QuotientContext& ctx, const SymPoly<Rational>& p1,
                                   const SymPoly<Rational>& p2) {
  const auto& engine = ctx.enveloping();
  return ctx.beta_q_inverse(ctx.reduce(engine.multiply(ctx.beta_q(p1), ctx.beta_q(p2))));
}

SymPoly<Rational> change_supplement(const QuotientContext& from, const QuotientContext& to,
                                    const SymPoly<Rational>& p) {
  if (!from.h().space().same_span(to.h().space()))
    throw MathError("change of supplement requires both contexts to share h");
  const PBWElement<Rational> moved = from.transport_to(to, from.beta_q(p));
  return to.beta_q_inverse(to.reduce(moved));
}

std::vector<SymPoly<Rational>> projection_along_h(const QuotientContext& to, const QuotientContext& from) {
  std::vector<SymPoly<Rational>> images;
  for (const auto& w : to.q().basis()) {
    const QVector c = from.frame().to_frame(w);
    const QVector qpart(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(from.q_dim()));
    images.push_back(SymPoly<Rational>::linear(qpart));
  }
  return images;
}

SymPoly<Rational> identify_along_h(const QuotientContext& to, const QuotientContext& from,
                                   const SymPoly<Rational>& p) {
  return p.substitute(projection_along_h(to, from));
}

SupplementMap::SupplementMap(const QuotientContext& from, const QuotientContext& to, unsigned degree)
    : monomials_(monomials_up_to(from.q_dim(), degree)), to_source_(projection_along_h(to, from)), degree_(degree) {
  if (!from.h().space().same_span(to.h().space()) || from.lambda().values().size() != to.lambda().values().size())
    throw MathError("supplement map requires complements of the same subalgebra h");
  for (std::size_t i = 0; i < monomials_.size(); ++i) {
    index_.emplace(monomials_[i], i);
    columns_.push_back(change_supplement(from, to, SymPoly<Rational>::monomial(monomials_[i])));
  }
}

SymPoly<Rational> SupplementMap::apply(const SymPoly<Rational>& p) const {
  if (p.degree() > static_cast<int>(degree_)) throw MathError("supplement map applied above its degree");
  SymPoly<Rational> out(columns_.empty() ? 0 : columns_[0].vars());
  for (const auto& [e, c] : p.terms()) out.add_scaled(columns_.at(index_.at(e)), c);
  return out;
}

SymPoly<Rational> SupplementMap::apply_identified(const SymPoly<Rational>& p) const {
  return apply(p).substitute(to_source_);
}

bool SupplementMap::is_unitriangular() const {
  for (const auto& m : monomials_) {
    const auto x = SymPoly<Rational>::monomial(m);
    const auto diff = apply_identified(x) - x;
    if (!diff.is_zero() && diff.degree() >= static_cast<int>(total_degree(m))) return false;
  }
  return true;
}

}  // namespace nilchar
