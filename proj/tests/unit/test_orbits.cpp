#include "doctest.h"
#include "generators.hpp"
#include "nilchar/dsl.hpp"
#include "nilchar/orbits.hpp"

using namespace nilchar;

namespace {

LinearForm form(std::initializer_list<long> xs) {
  QVector v;
  for (long x : xs) v.push_back(Rational(x));
  return LinearForm(v);
}

QVector vec(std::initializer_list<long> xs) { return form(xs).values(); }

}  // namespace

TEST_CASE("skew form is antisymmetric with even rank") {
  testing::Gen gen(51);
  for (const auto& name : builtin_names()) {
    const LieAlgebra g = builtin(name).algebra;
    for (int i = 0; i < 30; ++i) {
      QVector v(g.dim());
      for (auto& x : v) x = gen.rational(6);
      const QMatrix b = skew_form(g, LinearForm(v));
      for (std::size_t r = 0; r < g.dim(); ++r)
        for (std::size_t c = 0; c < g.dim(); ++c) CHECK(b(r, c) == -b(c, r));
      CHECK(rank(b) % 2 == 0);
    }
  }
}

TEST_CASE("orbit dimensions") {
  const auto file = builtin("example5");  // X U V E Z
  const LieAlgebra& g = file.algebra;
  const Subspace& h = file.subalgebra("h").space();
  SUBCASE("generic point of the example") {
    const long zeta = 3;
    const auto d = orbit_dims(g, h, form({0, 0, 0, 1, zeta}));
    CHECK(d.dim_g_orbit == 2);
    CHECK(d.dim_h_orbit == 1);
    CHECK(d.stabilizer.same_span(Subspace(5, {vec({1, -zeta, 0, 0, 0}), g.unit(3), g.unit(4)})));
  }
  SUBCASE("zero form") {
    const auto d = orbit_dims(g, h, LinearForm::zero(5));
    CHECK(d.dim_g_orbit == 0);
    CHECK(d.dim_h_orbit == 0);
  }
  SUBCASE("Heisenberg at Z*") {
    const LieAlgebra heis = builtin("heisenberg3").algebra;
    const auto d = orbit_dims(heis, Subspace::zero(3), form({0, 0, 1}));
    CHECK(d.dim_g_orbit == 2);
    CHECK(d.stabilizer.same_span(Subspace(3, {heis.unit(2)})));
  }
}

TEST_CASE("lagrangian condition") {
  SUBCASE("example5 has profile (1, 2)") {
    const auto file = builtin("example5");
    const auto r = lagrangian_check(file.algebra, file.character("lambda").lambda, 8, 0);
    CHECK(r.holds_generically);
    CHECK(r.max_dim_h == 1);
    CHECK(r.max_dim_g == 2);
    CHECK(r.samples.size() == 8);
    CHECK_FALSE(r.witnesses.empty());
    for (const auto& f : r.samples) CHECK(f(file.algebra.unit(3)) == Rational(1));
  }
  SUBCASE("Heisenberg with h = <Y, Z>, lambda = Z*") {
    const auto file = builtin("heisenberg3");
    const auto r = lagrangian_check(file.algebra, file.character("mu").lambda, 8, 0);
    CHECK(r.holds_generically);
    CHECK(r.max_dim_h == 1);
    CHECK(r.max_dim_g == 2);
  }
  SUBCASE("h = g in an abelian algebra") {
    const LieAlgebra g = builtin("abelian:3").algebra;
    const CharacterFunctional lambda(g, Subalgebra(g, Subspace::whole(3)), vec({1, 2, 3}));
    const auto r = lagrangian_check(g, lambda, 3, 0);
    CHECK(r.holds_generically);
    CHECK(r.max_dim_g == 0);
  }
  SUBCASE("h = 0 in the Heisenberg algebra fails") {
    const LieAlgebra g = builtin("heisenberg3").algebra;
    const CharacterFunctional lambda(g, Subalgebra(g, Subspace::zero(3)), {});
    CHECK_FALSE(lagrangian_check(g, lambda, 8, 0).holds_generically);
  }
  SUBCASE("k = 0 is rejected") {
    const auto file = builtin("example5");
    CHECK_THROWS_AS(lagrangian_check(file.algebra, file.character("lambda").lambda, 0, 0), MathError);
  }
  SUBCASE("monotone and reproducible in the number of samples") {
    const auto file = builtin("example5");
    const auto& lambda = file.character("lambda").lambda;
    for (std::uint64_t seed : {0u, 1u, 2u}) {
      const auto a = lagrangian_check(file.algebra, lambda, 3, seed);
      const auto b = lagrangian_check(file.algebra, lambda, 9, seed);
      for (std::size_t i = 0; i < a.samples.size(); ++i) CHECK(a.samples[i] == b.samples[i]);
      CHECK(b.max_dim_h >= a.max_dim_h);
      CHECK(b.max_dim_g >= a.max_dim_g);
      CHECK((!a.holds_generically || b.holds_generically));
    }
  }
}

TEST_CASE("Vergne polarizations") {
  SUBCASE("abelian") {
    const LieAlgebra g = builtin("abelian:3").algebra;
    const auto p = vergne_polarization(g, form({1, -1, 2}), ideal_flag(g));
    CHECK(p.b.dim() == 3);
  }
  SUBCASE("Heisenberg at Z* along 0 < <Z> < <Y,Z> < g") {
    const LieAlgebra g = builtin("heisenberg3").algebra;
    const auto flag = ideal_flag(g, {g.unit(1)});
    const auto p = vergne_polarization(g, form({0, 0, 1}), flag);
    CHECK(p.b.space().same_span(Subspace(3, {g.unit(1), g.unit(2)})));
  }
  SUBCASE("properties on random forms") {
    testing::Gen gen(52);
    for (const auto& name : builtin_names()) {
      const LieAlgebra g = builtin(name).algebra;
      for (int i = 0; i < 20; ++i) {
        QVector v(g.dim());
        for (auto& x : v) x = Rational(gen.integer(-5, 5));
        const LinearForm f(v);
        const auto p = vergne_polarization(g, f, ideal_flag(g));
        const auto d = orbit_dims(g, Subspace::zero(g.dim()), f);
        CHECK(p.b.space().contains(d.stabilizer));
        CHECK(2 * p.b.dim() == g.dim() + d.stabilizer.dim());
        for (const auto& x : p.b.space().basis())
          for (const auto& y : p.b.space().basis()) CHECK(f(g.bracket(x, y)).is_zero());
      }
    }
  }
  SUBCASE("example5 at a generic point") {
    const auto file = builtin("example5");
    const LieAlgebra& g = file.algebra;
    const Subspace& h = file.subalgebra("h").space();
    const LinearForm f = form({0, 0, 0, 1, 3});
    const auto p = transverse_polarization(g, h, f);
    CHECK(p.b.dim() == 4);
    CHECK(p.b.space().contains(orbit_dims(g, h, f).stabilizer));
    CHECK(h.intersection(p.b.space()).same_span(Subspace(5, {g.unit(3)})));
    const Subspace q_b = adapted_supplement(g, h, p.b.space());
    CHECK(q_b.dim() == 3);
    CHECK(p.b.space().contains(q_b));
    CHECK(q_b.sum(h).dim() == 5);
    CHECK(q_b.same_span(Subspace(5, {vec({1, -3, 0, 0, 0}), g.unit(2), g.unit(4)})));
  }
}

TEST_CASE("adapted supplements") {
  const LieAlgebra g = builtin("heisenberg3").algebra;
  const Subspace h(3, {g.unit(0)});
  const Subspace b(3, {g.unit(1), g.unit(2)});
  CHECK(adapted_supplement(g, h, b).same_span(b));
  CHECK_THROWS_AS(adapted_supplement(g, Subspace(3, {g.unit(1)}), b), MathError);
  SUBCASE("transverse polarization for h = <Y> avoids b = <Y, Z>") {
    const auto p = transverse_polarization(g, Subspace(3, {g.unit(1)}), form({0, 1, 4}));
    CHECK(p.b.space().same_span(Subspace(3, {g.unit(0), g.unit(2)})));
  }
  SUBCASE("no transverse polarization when h is central") {
    CHECK_THROWS_AS(transverse_polarization(g, Subspace(3, {g.unit(2)}), form({0, 0, 1})), MathError);
  }
}

TEST_CASE("shear search finds a planted shear") {
  const LieAlgebra g = builtin("example5").algebra;
  const Subspace h(5, {g.unit(0), g.unit(3)});
  const Subspace q(5, {g.unit(1), g.unit(2), g.unit(4)});
  const Shear planted{1, 0, Rational(-2)};
  const Subspace target = apply_shear(q, h, planted);
  CHECK(target.contains(vec({-2, 0, 1, 0, 0})));
  const auto found = shear_search(q, h, [&](const Subspace& s) { return s.same_span(target); });
  REQUIRE(found);
  CHECK(found->target == 1);
  CHECK(found->direction == 0);
  CHECK(found->coeff == Rational(-2));
  CHECK_FALSE(shear_search(q, h, [](const Subspace&) { return false; }));
}
