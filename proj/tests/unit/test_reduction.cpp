#include "doctest.h"
#include "generators.hpp"
#include "nilchar/dsl.hpp"
#include "nilchar/reduction.hpp"
#include "oracles.hpp"

using namespace nilchar;

namespace {

struct Example5 {
  AlgebraFile file = builtin("example5");
  QuotientContext ctx{file.algebra, file.character("lambda").lambda,
                      complement(file.algebra, file.subalgebra("h").space(), std::vector<std::size_t>{1, 2, 4})};
};

// Variables of S(q) in the example: U, V, Z.
SymPoly<Rational> var(std::size_t i) { return SymPoly<Rational>::variable(3, i); }
SymPoly<Rational> W() { return var(1) * var(1) - var(0) * var(2) * Rational(2); }

QuotientContext heisenberg_context(const Rational& lambda_y) {
  const LieAlgebra g = builtin("heisenberg3").algebra;
  const Subalgebra h(g, Subspace(3, {g.unit(1)}));
  return QuotientContext(g, CharacterFunctional(g, h, {lambda_y}), complement(g, h.space()));
}

/// Frame PBW monomial with the given exponents.
PBWElement<Rational> mono(const QuotientContext&, Exponents e) { return PBWElement<Rational>::monomial(e); }

std::vector<QuotientContext> all_contexts() {
  std::vector<QuotientContext> out;
  for (const auto& name : builtin_names()) {
    const auto file = builtin(name);
    for (const auto& c : file.characters)
      out.emplace_back(file.algebra, c.lambda, complement(file.algebra, c.lambda.subalgebra().space()));
  }
  return out;
}

}  // namespace

TEST_CASE("reduction examples") {
  const Example5 ex;
  const auto& ctx = ex.ctx;
  // frame order: U V Z | X E
  CHECK(ctx.q_names() == std::vector<std::string>{"U", "V", "Z"});
  CHECK(ctx.reduce(mono(ctx, {0, 0, 0, 0, 1})) == PBWElement<Rational>::constant(5, Rational(-1)));
  CHECK(ctx.reduce(mono(ctx, {1, 0, 0, 1, 0})).is_zero());
  const auto qm = mono(ctx, {2, 1, 3, 0, 0});
  CHECK(ctx.reduce(qm) == qm);
}

TEST_CASE("quotient symmetrization examples") {
  const Example5 ex;
  const auto z = var(2);
  CHECK(ex.ctx.beta_q(z) == mono(ex.ctx, {0, 0, 1, 0, 0}));
  CHECK(ex.ctx.beta_q_inverse(mono(ex.ctx, {0, 0, 1, 0, 0})) == z);
  CHECK_THROWS_AS(ex.ctx.beta_q_inverse(mono(ex.ctx, {0, 0, 0, 1, 0})), MathError);

  const auto heis = heisenberg_context(Rational(0));  // q = <X, Z>, h = <Y>
  CHECK(heis.q_names() == std::vector<std::string>{"X", "Z"});
  CHECK(heis.beta_q_inverse(mono(heis, {1, 1, 0})) == SymPoly<Rational>::monomial({1, 1}));
  // degree <= 1: beta_q is the identity on q
  const QVector coeffs{Rational(2), Rational(-3)};
  const auto lin = SymPoly<Rational>::linear(coeffs) + SymPoly<Rational>::constant(2, Rational(5));
  CHECK(heis.beta_q_inverse(heis.beta_q(lin)) == lin);
}

TEST_CASE("invariants of the five-dimensional example") {
  const Example5 ex;
  CHECK(invariants(ex.ctx, 0).elements.size() == 1);
  CHECK(ex.ctx.is_invariant(var(2)));
  CHECK(ex.ctx.is_invariant(W()));
  CHECK_FALSE(ex.ctx.is_invariant(var(0)));
  CHECK_FALSE(ex.ctx.is_invariant(var(1)));
  // Invariants are the polynomials in Z and W = V^2 - 2UZ.
  for (unsigned d = 0; d <= 6; ++d) {
    const auto basis = invariants(ex.ctx, d).elements;
    std::vector<SymPoly<Rational>> expected;
    for (unsigned j = 0; 2 * j <= d; ++j)
      for (unsigned i = 0; i + 2 * j <= d; ++i) {
        SymPoly<Rational> p = SymPoly<Rational>::constant(3, Rational(1));
        for (unsigned k = 0; k < i; ++k) p = p * var(2);
        for (unsigned k = 0; k < j; ++k) p = p * W();
        expected.push_back(p);
      }
    auto joint = basis;
    joint.insert(joint.end(), expected.begin(), expected.end());
    CHECK(basis.size() == expected.size());
    CHECK(polynomial_rank(basis) == basis.size());
    CHECK(polynomial_rank(joint) == basis.size());
    for (const auto& p : basis) CHECK(ex.ctx.is_invariant(p));
  }
}

TEST_CASE("invariance of W checked by naive rewriting") {
  // In the order U V Z X E, [H, beta(W)] must reduce to zero once trailing X and E
  // are replaced by -lambda(X) = 0 and -lambda(E) = -1.
  const LieAlgebra g = Frame::from_order(builtin("example5").algebra, {1, 2, 4, 0, 3}).algebra();
  testing::Naive w;
  for (const auto& [e, c] : testing::naive_symmetrize(g, {0, 2, 0, 0, 0})) testing::naive_add(w, e, c);
  for (const auto& [e, c] : testing::naive_symmetrize(g, {1, 0, 1, 0, 0})) testing::naive_add(w, e, c * Rational(-2));
  auto reduce = [](const testing::Naive& u) {
    testing::Naive out;
    for (const auto& [e, c] : u) {
      if (e[3] > 0) continue;
      Exponents f = e;
      f[4] = 0;
      testing::naive_add(out, f, e[4] % 2 ? -c : c);
    }
    return out;
  };
  for (std::size_t k : {3u, 4u}) {
    Exponents e(5, 0);
    e[k] = 1;
    const testing::Naive h{{e, Rational(1)}};
    auto commutator = testing::naive_multiply(g, h, w);
    for (const auto& [m, c] : testing::naive_multiply(g, w, h)) testing::naive_add(commutator, m, -c);
    CHECK(reduce(commutator).empty());
  }
}

TEST_CASE("polynomial families and specialization") {
  SUBCASE("example5 at degree 3") {
    const Example5 ex;
    const auto family = invariants_family(ex.ctx, 3);
    CHECK(family.elements.size() == 6);
    const auto at_one = specialize(family, Rational(1));
    CHECK(at_one.size() == 6);
    for (const auto& p : at_one) CHECK(ex.ctx.is_invariant(p));
    auto joint = at_one;
    const auto direct = invariants(ex.ctx, 3).elements;
    joint.insert(joint.end(), direct.begin(), direct.end());
    CHECK(polynomial_rank(joint) == direct.size());
    bool has_z = false;
    for (const auto& p : family.elements)
      has_z = has_z || specialize(p, Rational(1)) == var(2) || specialize(p, Rational(1)) == var(2) * Rational(-1);
    CHECK(has_z);
  }
  SUBCASE("abelian: every monomial is a t-independent invariant") {
    const auto file = builtin("abelian:3");
    const auto& lambda = file.character("lambda").lambda;
    const QuotientContext ctx(file.algebra, lambda, complement(file.algebra, lambda.subalgebra().space()));
    const auto family = invariants_family(ctx, 3);
    CHECK(family.elements.size() == monomials_up_to(2, 3).size());
    for (const auto& p : family.elements)
      for (const auto& [e, c] : p.terms()) CHECK(c.degree() == 0);
  }
}

TEST_CASE("quotient products") {
  const Example5 ex;
  const auto one = SymPoly<Rational>::constant(3, Rational(1));
  CHECK(quotient_product(ex.ctx, var(2), var(2)) == var(2) * var(2));
  CHECK(quotient_product(ex.ctx, one, W()) == W());
  CHECK(quotient_product(ex.ctx, W(), one) == W());

  const auto heis = heisenberg_context(Rational(1));
  const auto basis = invariants(heis, 1).elements;
  for (const auto& a : basis)
    for (const auto& b : basis)
      for (const auto& c : basis)
        CHECK(quotient_product(heis, quotient_product(heis, a, b), c) ==
              quotient_product(heis, a, quotient_product(heis, b, c)));
}

TEST_CASE("reduction properties on random elements") {
  testing::Gen gen(31);
  for (const auto& ctx : all_contexts()) {
    const auto& engine = ctx.enveloping();
    const auto values = ctx.lambda_values<Rational>();
    for (int i = 0; i < 100; ++i) {
      const auto u = gen.pbw(ctx.dim(), 3);
      const auto r = ctx.reduce(u);
      CHECK(ctx.reduce(r) == r);
      CHECK(ctx.is_reduced(r));
      // the ideal is killed: v (x_H + lambda(H)) reduces to zero
      const std::size_t j = static_cast<std::size_t>(gen.integer(0, static_cast<long>(ctx.h_dim()) - 1));
      Exponents e(ctx.dim(), 0);
      e[ctx.q_dim() + j] = 1;
      auto gen_h = PBWElement<Rational>::monomial(e);
      gen_h.add_term(Exponents(ctx.dim(), 0), values[j]);
      CHECK(ctx.reduce(engine.multiply(u, gen_h)).is_zero());
      // direct sum: u - beta_q(beta_q^{-1}(reduce u)) lies in the ideal
      CHECK(ctx.reduce(u - ctx.beta_q(ctx.beta_q_inverse(r))).is_zero());
      CHECK(ctx.beta_q(ctx.beta_q_inverse(r)) == r);
    }
    for (int i = 0; i < 50; ++i) {
      const auto p = gen.sympoly(ctx.q_dim(), 5);
      CHECK(ctx.beta_q_inverse(ctx.beta_q(p)) == p);
    }
  }
}

TEST_CASE("products of invariants are invariant and commute") {
  for (const auto& ctx : all_contexts()) {
    const auto basis = invariants(ctx, 4).elements;
    for (std::size_t i = 0; i < basis.size(); ++i)
      for (std::size_t j = i; j < basis.size(); ++j) {
        if (basis[i].degree() + basis[j].degree() > 6) continue;
        const auto ab = quotient_product(ctx, basis[i], basis[j]);
        CHECK(ctx.is_invariant(ab));
        CHECK(ab == quotient_product(ctx, basis[j], basis[i]));
      }
  }
}

TEST_CASE("change of supplement") {
  const Example5 ex;
  const auto& g = ex.file.algebra;
  const auto& lambda = ex.file.character("lambda").lambda;
  SUBCASE("same supplement gives the identity") {
    const SupplementMap m(ex.ctx, ex.ctx, 3);
    for (std::size_t i = 0; i < m.domain_monomials().size(); ++i)
      CHECK(m.column(i) == SymPoly<Rational>::monomial(m.domain_monomials()[i]));
  }
  // q2 = <U + 2X - E, V + E, Z - 3X>
  const QVector a{Rational(2), Rational(1), Rational(0), Rational(-1), Rational(0)};
  const QVector b{Rational(0), Rational(0), Rational(1), Rational(1), Rational(0)};
  const QVector c{Rational(-3), Rational(0), Rational(0), Rational(0), Rational(1)};
  const QuotientContext other(g, lambda, Subspace(5, {a, b, c}));
  SUBCASE("degree one: projection along h minus lambda of the h-part") {
    // U = y1 - 2X + E with X -> 0, E -> -1
    const auto mu = change_supplement(ex.ctx, other, var(0));
    SymPoly<Rational> expected = SymPoly<Rational>::variable(3, 0);
    expected.add_term({0, 0, 0}, Rational(-1));
    CHECK(mu == expected);
    auto ev = SymPoly<Rational>::variable(3, 1);
    ev.add_term({0, 0, 0}, Rational(1));  // V = y2 - E -> y2 + 1
    CHECK(change_supplement(ex.ctx, other, var(1)) == ev);
  }
  SUBCASE("unitriangular and invertible") {
    const SupplementMap forward(ex.ctx, other, 4);
    CHECK(forward.is_unitriangular());
    testing::Gen gen(41);
    for (int i = 0; i < 20; ++i) {
      const auto p = gen.sympoly(3, 4);
      CHECK(change_supplement(other, ex.ctx, change_supplement(ex.ctx, other, p)) == p);
      CHECK(forward.apply(p) == change_supplement(ex.ctx, other, p));
    }
  }
  SUBCASE("supplements of different subalgebras are rejected") {
    const Subalgebra e_only(g, Subspace(5, {g.unit(3)}));
    const QuotientContext small(g, CharacterFunctional(g, e_only, {Rational(1)}),
                                complement(g, e_only.space()));
    CHECK_THROWS_AS(change_supplement(ex.ctx, small, var(2)), MathError);
  }
  SUBCASE("non-complement is rejected") {
    CHECK_THROWS_AS(QuotientContext(g, lambda, Subspace(5, {g.unit(0), g.unit(1), g.unit(2)})), MathError);
  }
}
