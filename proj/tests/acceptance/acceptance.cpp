// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any criterion fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "nilchar/characters.hpp"
#include "nilchar/dsl.hpp"
#include "nilchar/errors.hpp"
#include "nilchar/reduction.hpp"
#include "../unit/generators.hpp"

using namespace nilchar;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Config {
  std::string label;
  AlgebraFile file;
  NamedCharacter character;
};

std::vector<Config> builtin_configurations() {
  std::vector<std::string> names = builtin_names();
  names.insert(names.end(), {"abelian:1", "abelian:3", "abelian:4"});
  std::vector<Config> out;
  for (const auto& name : names) {
    const AlgebraFile file = builtin(name);
    for (const auto& c : file.characters) out.push_back({name + "/" + c.name, file, c});
  }
  return out;
}

QuotientContext context_of(const Config& c) {
  return QuotientContext(c.file.algebra, c.character.lambda,
                         complement(c.file.algebra, c.character.lambda.subalgebra().space()));
}

QuotientContext example_context() {
  const AlgebraFile file = builtin("example5");
  return QuotientContext(file.algebra, file.character("lambda").lambda,
                         complement(file.algebra, file.subalgebra("h").space(), std::vector<std::size_t>{1, 2, 4}));
}

std::string shear_text(const std::optional<Shear>& s) {
  if (!s) return "canonical pair";
  std::ostringstream os;
  os << "shear q[" << s->target << "] += " << s->coeff.to_string() << "*h[" << s->direction << "]";
  return os.str();
}

// Criteria 1 and 2 share one run.
ExampleReport example_run(unsigned degree, int point_sign) {
  ExampleCheckOptions o;
  o.degree = degree;
  o.trials = 5;
  o.seed = 0;
  o.point_sign = point_sign;
  return verify_example_correction(o);
}

std::string example_detail(const ExampleReport& r, bool scalar) {
  std::size_t canonical = 0;
  std::string witness;
  for (const auto& t : r.trials) {
    if (scalar ? t.canonical_scalar : t.canonical_operator) ++canonical;
    if (t.shear) witness = shear_text(t.shear);
  }
  std::ostringstream os;
  os << r.invariants.size() << " invariants, " << r.trials.size() << " samples, canonical pair passed in "
     << canonical << "/" << r.trials.size();
  if (!witness.empty()) os << ", witness " << witness;
  return os.str();
}

Outcome criterion1(const ExampleReport& r) { return {r.operator_identity, example_detail(r, false)}; }
Outcome criterion2(const ExampleReport& r) { return {r.scalar_identity, example_detail(r, true)}; }

Outcome criterion3() {
  const Convention conv = calibration().chosen;
  bool ok = true;
  std::ostringstream os;
  for (const std::string name : {"example5", "heisenberg3"}) {
    const AlgebraFile file = builtin(name);
    const auto& c = file.character("lambda");
    const QuotientContext ctx(file.algebra, c.lambda, complement(file.algebra, c.lambda.subalgebra().space()));
    const auto basis = invariants(ctx, 4).elements;
    std::size_t pairs = 0;
    const auto forms = sample_generic_forms(file.algebra, c.lambda, 8, 0);
    for (const auto& f : forms) {
      const auto r = gamma_ct_report(ctx, basis, f, conv);
      ok = ok && r.multiplicative;
      pairs += r.pairs_checked;
    }
    os << name << ": " << forms.size() << " forms, " << basis.size() << " invariants, " << pairs << " pairs; ";
    ok = ok && forms.size() >= 8;
  }
  return {ok, os.str()};
}

Outcome criterion4() {
  const Convention conv = calibration().chosen;
  std::ostringstream os;
  os << "convention sigma=" << conv.sigma << " eval_sign=" << conv.eval_sign << "; ";
  bool ok = true;
  {
    const QuotientContext ctx = example_context();
    const auto basis = invariants(ctx, 3).elements;
    const auto forms = sample_generic_forms(ctx.algebra(), ctx.lambda(), 5, 0);
    std::size_t agree = 0, sheared = 0;
    for (const auto& f : forms) {
      const auto cmp = compare_characters(ctx, basis, f, conv);
      if (cmp.agreement) ++agree;
      if (cmp.shear) ++sheared;
    }
    ok = ok && forms.size() >= 5 && agree == forms.size();
    os << "example5: " << agree << "/" << forms.size() << " agree (" << sheared << " via shear); ";
  }
  {
    const AlgebraFile file = builtin("heisenberg3");
    const auto& lambda = file.character("lambda").lambda;
    const QuotientContext ctx(file.algebra, lambda, complement(file.algebra, lambda.subalgebra().space()));
    const auto basis = invariants(ctx, 3).elements;
    const auto forms = sample_generic_forms(file.algebra, lambda, 5, 0);
    std::size_t agree = 0;
    for (const auto& f : forms)
      if (compare_characters(ctx, basis, f, conv, false).agreement) ++agree;
    bool calibrated = false;
    for (const auto& [c, good] : calibration().table)
      if (c == conv) calibrated = good;
    ok = ok && calibrated && agree == forms.size();
    os << "heisenberg3: " << agree << "/" << forms.size() << " agree";
  }
  return {ok, os.str()};
}

Outcome criterion5() {
  bool ok = true;
  std::ostringstream os;
  for (const auto& config : builtin_configurations()) {
    const auto lag = lagrangian_check(config.file.algebra, config.character.lambda, 8, 0);
    if (!lag.holds_generically) {
      os << config.label << ": lagrangian fails, skipped; ";
      continue;
    }
    const QuotientContext ctx = context_of(config);
    const auto& engine = ctx.enveloping();
    const auto basis = invariants(ctx, 4).elements;
    std::vector<PBWElement<Rational>> lifted;
    for (const auto& p : basis) lifted.push_back(ctx.beta_q(p));
    std::size_t pairs = 0;
    for (std::size_t i = 0; i < basis.size(); ++i)
      for (std::size_t j = i + 1; j < basis.size(); ++j) {
        ++pairs;
        ok = ok && quotient_product(ctx, basis[i], basis[j]) == quotient_product(ctx, basis[j], basis[i]);
        // independent check directly in U(g)
        const auto comm = engine.multiply(lifted[i], lifted[j]) - engine.multiply(lifted[j], lifted[i]);
        ok = ok && ctx.reduce(comm).is_zero();
      }
    os << config.label << ": " << pairs << " pairs; ";
  }
  return {ok, os.str()};
}

Outcome criterion6() {
  const AlgebraFile file = builtin("example5");
  const auto r = lagrangian_check(file.algebra, file.character("lambda").lambda, 8, 0);
  std::ostringstream os;
  os << "dim h.f = " << r.max_dim_h << ", dim g.f = " << r.max_dim_g << " (8 samples, seed 0)";
  return {r.holds_generically && r.max_dim_h == 1 && r.max_dim_g == 2, os.str()};
}

// Explicit decomposition u = reduce(u) + sum_j v_j (H_j + lambda(H_j)), built term by term.
std::vector<PBWElement<Rational>> ideal_witness(const QuotientContext& ctx, const PBWElement<Rational>& u) {
  const auto values = ctx.lambda_values<Rational>();
  std::vector<PBWElement<Rational>> v(ctx.h_dim(), PBWElement<Rational>(ctx.dim()));
  for (const auto& [e, c] : u.terms()) {
    // x^a h^b = m (h_j + l_j) - l_j m with j the last h index present and m = x^a h^(b - e_j).
    Exponents m = e;
    Rational coeff = c;
    for (std::size_t j = ctx.h_dim(); j-- > 0;) {
      while (m[ctx.q_dim() + j] > 0) {
        --m[ctx.q_dim() + j];
        v[j].add_term(m, coeff);
        coeff = -coeff * values[j];
      }
    }
  }
  return v;
}

Outcome criterion7() {
  std::ostringstream os;
  bool ok = true;
  std::size_t nilpotent_builtins = 0;
  testing::Gen gen(2024);
  for (const auto& name : std::vector<std::string>{"example5", "heisenberg3", "abelian:1", "abelian:2", "abelian:3"}) {
    const LieAlgebra g = builtin(name).algebra;
    const auto rep = validate(g);
    ok = ok && rep.antisymmetric && rep.jacobi && rep.nilpotent;
    const std::size_t n = g.dim();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        ok = ok && g.bracket(g.unit(i), g.unit(j)) == [&] {
          QVector w = g.bracket(g.unit(j), g.unit(i));
          for (auto& x : w) x = -x;
          return w;
        }();
        for (std::size_t k = 0; k < n; ++k) {
          const QVector a = g.bracket(g.unit(i), g.bracket(g.unit(j), g.unit(k)));
          const QVector b = g.bracket(g.unit(j), g.bracket(g.unit(k), g.unit(i)));
          const QVector c = g.bracket(g.unit(k), g.bracket(g.unit(i), g.unit(j)));
          for (std::size_t r = 0; r < n; ++r) ok = ok && (a[r] + b[r] + c[r]).is_zero();
        }
      }
    if (rep.nilpotent) {
      ++nilpotent_builtins;
      for (int s = 0; s < 5; ++s) {
        QVector y(n);
        for (auto& x : y) x = gen.rational();
        for (const auto& t : duflo_factor_traces(g, y, static_cast<int>(n) + 1)) ok = ok && t.is_zero();
      }
    }
  }
  os << nilpotent_builtins << " builtins validated; ";

  for (const auto& config : builtin_configurations()) {
    if (config.file.algebra.dim() > 5) continue;
    const QuotientContext ctx = context_of(config);
    const auto& engine = ctx.enveloping();
    const std::size_t n = ctx.dim();
    for (int i = 0; i < 100; ++i) {
      const auto a = gen.pbw(n, 3), b = gen.pbw(n, 3), c = gen.pbw(n, 3);
      ok = ok && engine.multiply(engine.multiply(a, b), c) == engine.multiply(a, engine.multiply(b, c));
    }
    // beta on all of g and beta_q on q: unitriangular, and beta_q^{-1} inverts beta_q
    for (const auto& e : monomials_up_to(n, 5)) {
      const auto s = engine.symmetrize_monomial(e);
      const unsigned d = total_degree(e);
      for (const auto& [m, c] : s.terms()) {
        if (total_degree(m) > d) ok = false;
        if (total_degree(m) == d) ok = ok && m == e && c == Rational::one();
      }
    }
    for (const auto& e : monomials_up_to(ctx.q_dim(), 5)) {
      const auto p = SymPoly<Rational>::monomial(e);
      ok = ok && ctx.beta_q_inverse(ctx.beta_q(p)) == p;
    }
    const auto values = ctx.lambda_values<Rational>();
    for (int i = 0; i < 100; ++i) {
      const auto u = gen.pbw(n, 4, 6);
      const auto r = ctx.reduce(u);
      ok = ok && ctx.reduce(r) == r && ctx.is_reduced(r);
      for (std::size_t j = 0; j < ctx.h_dim(); ++j) {
        Exponents e(n, 0);
        e[ctx.q_dim() + j] = 1;
        auto shifted = PBWElement<Rational>::monomial(e);
        shifted.add_term(Exponents(n, 0), values[j]);
        ok = ok && ctx.reduce(engine.multiply(u, shifted)).is_zero();
      }
      // u = beta_q(p) + sum_j v_j (H_j + lambda(H_j)) with the witness checked in U(g)
      const auto p = ctx.beta_q_inverse(r);
      PBWElement<Rational> rebuilt = ctx.beta_q(p);
      const auto v = ideal_witness(ctx, u);
      for (std::size_t j = 0; j < ctx.h_dim(); ++j) {
        Exponents e(n, 0);
        e[ctx.q_dim() + j] = 1;
        auto shifted = PBWElement<Rational>::monomial(e);
        shifted.add_term(Exponents(n, 0), values[j]);
        rebuilt += engine.multiply(v[j], shifted);
      }
      ok = ok && rebuilt == u;
    }
    os << config.label << " ok; ";
  }
  return {ok, os.str()};
}

Outcome criterion8() {
  const QuotientContext ctx = example_context();
  const auto family = invariants_family(ctx, 3);
  const auto direct = invariants(ctx, 3).elements;
  const auto at_one = specialize(family, Rational(1));
  bool certified = !at_one.empty();
  for (const auto& p : at_one) certified = certified && ctx.is_invariant(p);
  std::ostringstream os;
  os << "family space dim " << family.elements.size() << ", specialization at t=1 dim " << at_one.size()
     << ", direct invariant space dim " << direct.size();
  return {!family.elements.empty() && certified, os.str()};
}

}  // namespace

int main() {
  int failures = 0;
  auto run = [&](int number, const std::string& title, const std::function<Outcome()>& body) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = body();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!o.pass) ++failures;
    std::printf("[%s] criterion %d: %s (%.2fs) -- %s\n", o.pass ? "PASS" : "FAIL", number, title.c_str(), secs,
                o.detail.c_str());
    std::fflush(stdout);
  };

  ExampleReport example;
  run(1, "example correction identity, operator form, degree <= 5", [&] {
    example = example_run(5, 1);
    return criterion1(example);
  });
  run(2, "example correction identity, scalar form, degree <= 5", [&] { return criterion2(example); });
  run(3, "gamma_ct multiplicative, degree <= 4", criterion3);
  run(4, "gamma_ct agrees with the polarization character, degree <= 3", criterion4);
  run(5, "invariants commute on lagrangian builtins, degree <= 4", criterion5);
  run(6, "lagrangian profile on example5", criterion6);
  run(7, "structural suite", criterion7);
  run(8, "specialization of polynomial families", criterion8);

  // Beyond the criteria: the first degree where U^3 terms occur.
  const auto info = [](const char* what, const ExampleReport& r) {
    std::printf("[INFO] %s: operator %s, scalar %s -- %s\n", what, r.operator_identity ? "holds" : "fails",
                r.scalar_identity ? "holds" : "fails", example_detail(r, false).c_str());
  };
  info("degree 6 at l = f", example_run(6, 1));
  info("degree 6 at l = -f", example_run(6, -1));

  std::printf("%d of 8 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
