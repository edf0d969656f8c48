#ifndef NILCHAR_REDUCTION_HPP
#define NILCHAR_REDUCTION_HPP

#include <cstddef>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "nilchar/enveloping.hpp"
#include "nilchar/subspace.hpp"

namespace nilchar {

/// Data (g, h, lambda, q) for computing in U(g)/U(g)h_lambda, where h_lambda is
/// spanned by x_H + lambda(H). The PBW frame lists the q basis first and the h
/// basis last, so the left ideal acts only on trailing factors:
///   u' x_H  ==  -lambda(H) u'   (mod U(g)h_lambda).
class QuotientContext {
 public:
  /// Throws MathError unless q + h = g is direct and lambda is a character of h.
  QuotientContext(LieAlgebra g, CharacterFunctional lambda, Subspace q);

  const LieAlgebra& algebra() const { return g_; }
  const Subalgebra& h() const { return lambda_.subalgebra(); }
  const CharacterFunctional& lambda() const { return lambda_; }
  const Subspace& q() const { return q_; }
  const Frame& frame() const { return *frame_; }
  const Enveloping& enveloping() const { return *engine_; }
  std::size_t q_dim() const { return q_.dim(); }
  std::size_t h_dim() const { return lambda_.subalgebra().dim(); }
  std::size_t dim() const { return g_.dim(); }
  /// Display names of the q basis vectors (the variables of S(q)).
  std::vector<std::string> q_names() const;

  /// lambda(H_j) for the h basis, cast to a coefficient ring.
  template <class C>
  std::vector<C> lambda_values() const {
    std::vector<C> out;
    for (const auto& v : lambda_.values()) out.push_back(C(v));
    return out;
  }
  /// t * lambda(H_j): the rescaled character of a polynomial family.
  std::vector<ParamPoly> family_values() const;

  template <class C>
  bool is_reduced(const PBWElement<C>& u) const {
    for (const auto& [e, c] : u.terms())
      for (std::size_t j = 0; j < h_dim(); ++j)
        if (e[q_dim() + j] != 0) return false;
    return true;
  }

  /// Projection onto q-only PBW monomials along U(g)h_values.
  template <class C>
  PBWElement<C> reduce(const PBWElement<C>& u, std::span<const C> h_values) const {
    check(u);
    PBWElement<C> out(dim());
    for (const auto& [e, c] : u.terms()) {
      C factor = c;
      Exponents f = e;
      for (std::size_t j = 0; j < h_dim(); ++j) {
        for (unsigned k = 0; k < e[q_dim() + j]; ++k) factor = factor * (-h_values[j]);
        f[q_dim() + j] = 0;
      }
      out.add_term(f, factor);
    }
    return out;
  }
  PBWElement<Rational> reduce(const PBWElement<Rational>& u) const {
    const auto values = lambda_values<Rational>();
    return reduce<Rational>(u, values);
  }

  /// Quotient symmetrization S(q) -> U(g)/U(g)h_lambda (reduced representative).
  template <class C>
  PBWElement<C> beta_q(const SymPoly<C>& p, std::span<const C> h_values) const {
    if (p.vars() != q_dim()) throw MathError("beta_q: polynomial must live on q");
    PBWElement<C> full(dim());
    for (const auto& [e, c] : p.terms()) {
      Exponents padded = e;
      padded.resize(dim(), 0);
      full.add_scaled(engine_->symmetrize_monomial(padded), c);
    }
    return reduce(full, h_values);
  }
  PBWElement<Rational> beta_q(const SymPoly<Rational>& p) const {
    const auto values = lambda_values<Rational>();
    return beta_q<Rational>(p, values);
  }

  /// Inverse of beta_q on reduced elements, by back-substitution down the degree
  /// filtration (beta_q(x^a) = x^a + lower). Throws MathError on unreduced input.
  template <class C>
  SymPoly<C> beta_q_inverse(const PBWElement<C>& u, std::span<const C> h_values) const {
    check(u);
    if (!is_reduced(u)) throw MathError("beta_q_inverse: element is not reduced modulo U(g)h_lambda");
    PBWElement<C> rest = u;
    SymPoly<C> out(q_dim());
    while (!rest.is_zero()) {
      const unsigned d = static_cast<unsigned>(rest.degree());
      std::vector<std::pair<Exponents, C>> top;
      for (const auto& [e, c] : rest.terms())
        if (total_degree(e) == d) top.emplace_back(e, c);
      for (const auto& [e, c] : top) {
        const Exponents qe(e.begin(), e.begin() + static_cast<std::ptrdiff_t>(q_dim()));
        out.add_term(qe, c);
        rest.add_scaled(beta_q(SymPoly<C>::monomial(qe), h_values), -c);
      }
    }
    return out;
  }
  SymPoly<Rational> beta_q_inverse(const PBWElement<Rational>& u) const {
    const auto values = lambda_values<Rational>();
    return beta_q_inverse<Rational>(u, values);
  }

  /// reduce(ad H_j (beta_q(p))) for the j-th basis vector of h.
  template <class C>
  PBWElement<C> invariance_defect(const SymPoly<C>& p, std::size_t j, std::span<const C> h_values) const {
    const QVector hj = frame_unit(q_dim() + j);
    return reduce(engine_->adjoint(hj, beta_q(p, h_values)), h_values);
  }

  /// Post-hoc certificate: reduce(ad H (beta_q(p))) = 0 for every basis vector H of h.
  bool is_invariant(const SymPoly<Rational>& p) const;

  /// The element v of g (parent coordinates) as a degree-1 PBW element in this frame.
  PBWElement<Rational> element(const QVector& v) const { return engine_->element(frame_->to_frame(v)); }

  /// Re-expresses u (in this frame) in another context's frame over the same g.
  template <class C>
  PBWElement<C> transport_to(const QuotientContext& other, const PBWElement<C>& u) const {
    return engine_->transport(u, other.enveloping(), images_in(other));
  }

 private:
  template <class C>
  void check(const PBWElement<C>& u) const {
    if (u.vars() != dim()) throw MathError("PBW element belongs to a different algebra");
  }
  QVector frame_unit(std::size_t i) const {
    QVector v(dim());
    v[i] = Rational::one();
    return v;
  }
  QMatrix images_in(const QuotientContext& other) const;

  LieAlgebra g_;
  CharacterFunctional lambda_;
  Subspace q_;
  std::shared_ptr<const Frame> frame_;
  std::shared_ptr<const Enveloping> engine_;
};

/// Filtered piece of (U(g)/U(g)h_lambda)^h, as polynomials on q.
struct InvariantBasis {
  unsigned degree = 0;
  std::vector<SymPoly<Rational>> elements;
};

/// Polynomial families t -> u_t of invariants for the rescaled character t*lambda.
struct FamilyBasis {
  unsigned degree = 0;
  std::vector<SymPoly<ParamPoly>> elements;
};

/// Basis of {p in S(q)_{<=d} : reduce(ad H (beta_q(p))) = 0 for all H in h}, as the
/// nullspace of the exact linear system in the monomial coefficients of p.
InvariantBasis invariants(const QuotientContext& ctx, unsigned degree);

/// The same system with lambda replaced by t*lambda, solved over Q(t); kernel
/// vectors are cleared of denominators into Q[t]-families.
FamilyBasis invariants_family(const QuotientContext& ctx, unsigned degree);

/// Substitutes t = t0 and keeps a maximal linearly independent subset of the
/// nonvanishing specializations.
std::vector<SymPoly<Rational>> specialize(const FamilyBasis& family, const Rational& t0);

/// Product transported to S(q): beta_q^{-1}(reduce(beta_q(p1) beta_q(p2))).
SymPoly<Rational> quotient_product(const QuotientContext& ctx, const SymPoly<Rational>& p1,
                                   const SymPoly<Rational>& p2);

/// Rank of a family of polynomials (as coefficient vectors).
std::size_t polynomial_rank(const std::vector<SymPoly<Rational>>& polys);

/// M(p) = beta_{q2}^{-1}(reduce_{q2}(beta_{q1}(p))) on S(q1)_{<=d}, for two
/// complements q1, q2 of the same h with the same lambda.
class SupplementMap {
 public:
  SupplementMap(const QuotientContext& from, const QuotientContext& to, unsigned degree);

  unsigned degree() const { return degree_; }
  const std::vector<Exponents>& domain_monomials() const { return monomials_; }
  /// Image of the i-th domain monomial, as a polynomial on the target supplement.
  const SymPoly<Rational>& column(std::size_t i) const { return columns_[i]; }

  /// Polynomial on the target supplement (raw coordinates of q2).
  SymPoly<Rational> apply(const SymPoly<Rational>& p) const;
  /// apply() followed by the identification S(q2) -> S(q1) along h.
  SymPoly<Rational> apply_identified(const SymPoly<Rational>& p) const;
  /// Every M(x^a) minus the identified x^a has lower total degree.
  bool is_unitriangular() const;

 private:
  std::vector<Exponents> monomials_;
  std::map<Exponents, std::size_t> index_;
  std::vector<SymPoly<Rational>> columns_;
  std::vector<SymPoly<Rational>> to_source_;  // images of q2 variables in S(q1)
  unsigned degree_;
};

/// Computes M(p) for a single polynomial without tabulating the whole map.
SymPoly<Rational> change_supplement(const QuotientContext& from, const QuotientContext& to,
                                    const SymPoly<Rational>& p);

/// Linear images of the variables of S(to.q) in S(from.q): each basis vector of
/// to.q is projected along h onto from.q.
std::vector<SymPoly<Rational>> projection_along_h(const QuotientContext& to, const QuotientContext& from);

/// Rewrites a polynomial on to.q as a polynomial on from.q via projection along h.
SymPoly<Rational> identify_along_h(const QuotientContext& to, const QuotientContext& from,
                                   const SymPoly<Rational>& p);

}  // namespace nilchar

#endif
