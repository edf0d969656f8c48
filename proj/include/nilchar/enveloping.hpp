#ifndef NILCHAR_ENVELOPING_HPP
#define NILCHAR_ENVELOPING_HPP

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "nilchar/lie_algebra.hpp"
#include "nilchar/sym_poly.hpp"

namespace nilchar {

/// Element of U(g) in PBW normal form: exponent vectors are read in the PBW order
/// of the owning Enveloping engine (generator 0 leftmost).
template <class C>
class PBWElement : public detail::TermMap<C> {
  using Base = detail::TermMap<C>;

 public:
  PBWElement() = default;
  explicit PBWElement(std::size_t dim) : Base(dim) {}

  static PBWElement constant(std::size_t dim, const C& c) {
    PBWElement u(dim);
    u.add_term(Exponents(dim, 0), c);
    return u;
  }
  static PBWElement monomial(const Exponents& e, const C& c = C::one()) {
    PBWElement u(e.size());
    u.add_term(e, c);
    return u;
  }

  /// Coefficient-ring change (e.g. Rational -> ParamPoly).
  template <class D>
  PBWElement<D> cast() const {
    PBWElement<D> out(this->vars());
    for (const auto& [e, c] : this->terms()) out.add_term(e, D(c));
    return out;
  }

  PBWElement& operator+=(const PBWElement& o) {
    this->add_scaled(o, C::one());
    return *this;
  }
  PBWElement& operator-=(const PBWElement& o) {
    this->add_scaled(o, -C::one());
    return *this;
  }
  friend PBWElement operator+(PBWElement a, const PBWElement& b) { return a += b; }
  friend PBWElement operator-(PBWElement a, const PBWElement& b) { return a -= b; }
  friend PBWElement operator*(PBWElement a, const C& s) {
    a.scale_by(s);
    return a;
  }

  std::string to_string(const std::vector<std::string>& names) const { return format_terms(*this, names); }
};

/// Permutation giving the PBW variable order: order[p] is the basis index placed at position p.
using BasisOrder = std::vector<std::size_t>;

/// An ordered basis of g (rows, in the algebra's own coordinates) together with
/// the algebra's structure constants re-expressed in that basis.
class Frame {
 public:
  Frame(const LieAlgebra& g, QMatrix basis, std::vector<std::string> names);
  static Frame identity(const LieAlgebra& g);
  static Frame from_order(const LieAlgebra& g, const BasisOrder& order);

  const LieAlgebra& algebra() const { return algebra_; }
  const QMatrix& basis() const { return basis_; }
  std::size_t dim() const { return basis_.rows(); }
  const std::vector<std::string>& names() const { return algebra_.basis_names(); }

  /// Coordinates in this frame of a vector given in the parent's coordinates.
  QVector to_frame(const QVector& v) const;
  QVector to_parent(const QVector& c) const;

 private:
  QMatrix basis_;
  QMatrix to_frame_;  // inverse of basis^T
  LieAlgebra algebra_;
};

/// U(g) with PBW order equal to the basis order of the given algebra. Products are
/// computed by straightening: x_j x_i = x_i x_j + [x_j, x_i] whenever j > i.
///
/// Monomial-times-generator products are memoized behind a mutex, so one engine
/// may be shared across threads.
class Enveloping {
 public:
  explicit Enveloping(LieAlgebra algebra);

  const LieAlgebra& algebra() const { return algebra_; }
  std::size_t dim() const { return algebra_.dim(); }
  const std::vector<std::string>& names() const { return algebra_.basis_names(); }

  /// x^m * x_k in normal form.
  std::shared_ptr<const PBWElement<Rational>> times_generator(const Exponents& m, std::size_t k) const;
  /// x^a * x^b in normal form.
  PBWElement<Rational> monomial_product(const Exponents& a, const Exponents& b) const;
  /// Product of the generators in `word`, left to right.
  PBWElement<Rational> straighten(std::span<const std::size_t> word) const;
  /// Average of the straightened distinct orderings of the multiset x^m.
  PBWElement<Rational> symmetrize_monomial(const Exponents& m) const;

  PBWElement<Rational> one() const { return PBWElement<Rational>::constant(dim(), Rational::one()); }
  PBWElement<Rational> generator(std::size_t i) const;
  /// The degree-1 element sum_i v_i x_i.
  PBWElement<Rational> element(const QVector& v) const;

  template <class C>
  PBWElement<C> multiply(const PBWElement<C>& a, const PBWElement<C>& b) const {
    check(a);
    check(b);
    PBWElement<C> out(dim());
    for (const auto& [ea, ca] : a.terms())
      for (const auto& [eb, cb] : b.terms()) {
        const C c = ca * cb;
        const auto prod = monomial_product(ea, eb);
        for (const auto& [e, r] : prod.terms()) out.add_term(e, c * r);
      }
    return out;
  }

  /// Symmetrization beta: S(g) -> U(g), linear extension of symmetrize_monomial.
  template <class C>
  PBWElement<C> symmetrize(const SymPoly<C>& p) const {
    if (p.vars() != dim()) throw MathError("symmetrize: polynomial must live on all of g");
    PBWElement<C> out(dim());
    for (const auto& [e, c] : p.terms()) {
      const auto sym = symmetrize_monomial(e);
      for (const auto& [m, r] : sym.terms()) out.add_term(m, c * r);
    }
    return out;
  }

  /// ad h (u) = h u - u h.
  template <class C>
  PBWElement<C> adjoint(const QVector& h, const PBWElement<C>& u) const {
    const PBWElement<C> x = element(h).template cast<C>();
    return multiply(x, u) - multiply(u, x);
  }

  /// Re-expresses u in another engine's PBW basis. Row i of `images` holds the
  /// coordinates of this engine's generator i in the target's generators.
  template <class C>
  PBWElement<C> transport(const PBWElement<C>& u, const Enveloping& target, const QMatrix& images) const {
    check(u);
    if (images.rows() != dim() || images.cols() != target.dim()) throw MathError("transport: bad image matrix");
    std::vector<PBWElement<Rational>> gens;
    for (std::size_t i = 0; i < dim(); ++i) gens.push_back(target.element(images.row(i)));
    PBWElement<C> out(target.dim());
    for (const auto& [e, c] : u.terms()) {
      PBWElement<Rational> prod = target.one();
      for (std::size_t i = 0; i < e.size(); ++i)
        for (unsigned k = 0; k < e[i]; ++k) prod = target.multiply(prod, gens[i]);
      out.add_scaled(prod, c);
    }
    return out;
  }

 private:
  template <class C>
  void check(const PBWElement<C>& u) const {
    if (u.vars() != dim()) throw MathError("PBW element belongs to a different algebra");
  }

  LieAlgebra algebra_;
  mutable std::mutex mutex_;
  mutable std::map<std::pair<Exponents, std::size_t>, std::shared_ptr<const PBWElement<Rational>>> product_cache_;
  mutable std::map<Exponents, std::shared_ptr<const PBWElement<Rational>>> sym_cache_;
};

/// Straightens `word` (indices into the algebra's basis) in the PBW order given by
/// `order`. Exponents of the result are indexed by position in `order`.
PBWElement<Rational> straighten(const LieAlgebra& algebra, const BasisOrder& order,
                                std::span<const std::size_t> word, const Rational& coeff = Rational::one());

}  // namespace nilchar

#endif
