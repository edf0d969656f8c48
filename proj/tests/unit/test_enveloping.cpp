#include "doctest.h"
#include "generators.hpp"
#include "nilchar/dsl.hpp"
#include "nilchar/enveloping.hpp"
#include "oracles.hpp"

using namespace nilchar;

namespace {

Exponents ex(std::initializer_list<unsigned> xs) { return Exponents(xs); }

PBWElement<Rational> pbw(std::size_t n, std::initializer_list<std::pair<Exponents, Rational>> terms) {
  PBWElement<Rational> u(n);
  for (const auto& [e, c] : terms) u.add_term(e, c);
  return u;
}

}  // namespace

TEST_CASE("straightening examples") {
  const LieAlgebra heis = builtin("heisenberg3").algebra;
  const std::vector<std::size_t> yx{1, 0};
  CHECK(straighten(heis, {0, 1, 2}, yx) == pbw(3, {{ex({1, 1, 0}), Rational(1)}, {ex({0, 0, 1}), Rational(-1)}}));
  const std::vector<std::size_t> sorted{0, 0, 1, 2};
  CHECK(straighten(heis, {0, 1, 2}, sorted) == pbw(3, {{ex({2, 1, 1}), Rational(1)}}));

  const LieAlgebra g = builtin("example5").algebra;  // X U V E Z
  const std::vector<std::size_t> xu{0, 1};
  // order (U, V, Z, X, E): positions U=0 V=1 Z=2 X=3 E=4
  CHECK(straighten(g, {1, 2, 4, 0, 3}, xu) ==
        pbw(5, {{ex({1, 0, 0, 1, 0}), Rational(1)}, {ex({0, 1, 0, 0, 0}), Rational(1)}}));
}

TEST_CASE("multiplication examples") {
  const Enveloping u(builtin("heisenberg3").algebra);
  const auto X = u.generator(0), Y = u.generator(1), Z = u.generator(2);
  CHECK(u.multiply(u.one(), X) == X);
  CHECK(u.multiply(Y, X) == pbw(3, {{ex({1, 1, 0}), Rational(1)}, {ex({0, 0, 1}), Rational(-1)}}));
  CHECK(u.multiply(X, Y) - u.multiply(Y, X) == Z);
}

TEST_CASE("symmetrization examples") {
  const Enveloping u(builtin("heisenberg3").algebra);
  CHECK(u.symmetrize_monomial(ex({1, 0, 0})) == u.generator(0));
  CHECK(u.symmetrize_monomial(ex({1, 1, 0})) ==
        pbw(3, {{ex({1, 1, 0}), Rational(1)}, {ex({0, 0, 1}), Rational(-1, 2)}}));
  CHECK(u.symmetrize_monomial(ex({2, 0, 0})) == pbw(3, {{ex({2, 0, 0}), Rational(1)}}));
}

TEST_CASE("adjoint examples") {
  const Enveloping heis(builtin("heisenberg3").algebra);
  CHECK(heis.adjoint(heis.algebra().unit(0), heis.generator(1)) == heis.generator(2));
  CHECK(heis.adjoint(heis.algebra().unit(0), heis.one()).is_zero());
  const Enveloping u(builtin("example5").algebra);
  const auto u2 = pbw(5, {{ex({0, 2, 0, 0, 0}), Rational(1)}});
  // UV + VU = 2UV - E
  CHECK(u.adjoint(u.algebra().unit(0), u2) ==
        pbw(5, {{ex({0, 1, 1, 0, 0}), Rational(2)}, {ex({0, 0, 0, 1, 0}), Rational(-1)}}));
}

TEST_CASE("engine products agree with naive word rewriting") {
  testing::Gen gen(21);
  for (const auto& name : builtin_names()) {
    const Enveloping u(builtin(name).algebra);
    for (int i = 0; i < 40; ++i) {
      const auto a = gen.pbw(u.dim(), 3), b = gen.pbw(u.dim(), 3);
      CHECK(testing::as_naive(u.multiply(a, b)) == testing::naive_multiply(u.algebra(), a.terms(), b.terms()));
    }
  }
}

TEST_CASE("associativity on random triples") {
  testing::Gen gen(22);
  for (const auto& name : builtin_names()) {
    const Enveloping u(builtin(name).algebra);
    for (int i = 0; i < 100; ++i) {
      const auto a = gen.pbw(u.dim(), 3), b = gen.pbw(u.dim(), 3), c = gen.pbw(u.dim(), 3);
      CHECK(u.multiply(u.multiply(a, b), c) == u.multiply(a, u.multiply(b, c)));
    }
  }
}

TEST_CASE("straightening respects the bracket") {
  for (const auto& name : builtin_names()) {
    const Enveloping u(builtin(name).algebra);
    for (std::size_t i = 0; i < u.dim(); ++i)
      for (std::size_t j = 0; j < u.dim(); ++j) {
        const auto lhs = u.multiply(u.generator(i), u.generator(j)) - u.multiply(u.generator(j), u.generator(i));
        CHECK(lhs == u.element(u.algebra().bracket(u.algebra().unit(i), u.algebra().unit(j))));
      }
  }
}

TEST_CASE("symmetrization agrees with averaging over all orderings") {
  testing::Gen gen(23);
  for (const auto& name : {"example5", "heisenberg3"}) {
    const Enveloping u(builtin(name).algebra);
    for (const auto& e : monomials_up_to(u.dim(), 4))
      if (gen.integer(0, 3) == 0) CHECK(testing::as_naive(u.symmetrize_monomial(e)) == testing::naive_symmetrize(u.algebra(), e));
  }
}

TEST_CASE("symmetrization is unitriangular up to degree 5") {
  for (const auto& name : builtin_names()) {
    const Enveloping u(builtin(name).algebra);
    for (const auto& e : monomials_up_to(u.dim(), 5)) {
      const auto b = u.symmetrize_monomial(e);
      CHECK(b.coefficient(e) == Rational(1));
      for (const auto& [m, c] : b.terms())
        if (m != e) CHECK(total_degree(m) < total_degree(e));
    }
  }
}

TEST_CASE("adjoint action is a derivation") {
  testing::Gen gen(24);
  for (const auto& name : builtin_names()) {
    const Enveloping u(builtin(name).algebra);
    for (int i = 0; i < 30; ++i) {
      QVector h(u.dim());
      for (auto& x : h) x = gen.rational(3);
      const auto a = gen.pbw(u.dim(), 2), b = gen.pbw(u.dim(), 2);
      CHECK(u.adjoint(h, u.multiply(a, b)) == u.multiply(u.adjoint(h, a), b) + u.multiply(a, u.adjoint(h, b)));
    }
  }
}

TEST_CASE("transport between frames is an algebra map") {
  const LieAlgebra g = builtin("example5").algebra;
  const Frame frame = Frame::from_order(g, {1, 2, 4, 0, 3});
  const Enveloping source(g), target(frame.algebra());
  QMatrix images(5, 5);
  for (std::size_t i = 0; i < 5; ++i) {
    const QVector c = frame.to_frame(g.unit(i));
    for (std::size_t j = 0; j < 5; ++j) images(i, j) = c[j];
  }
  testing::Gen gen(25);
  for (int i = 0; i < 30; ++i) {
    const auto a = gen.pbw(5, 3), b = gen.pbw(5, 3);
    CHECK(source.transport(source.multiply(a, b), target, images) ==
          target.multiply(source.transport(a, target, images), source.transport(b, target, images)));
  }
}
