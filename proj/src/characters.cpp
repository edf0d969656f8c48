#include "nilchar/characters.hpp"

#include <algorithm>

#include "nilchar/dsl.hpp"

namespace nilchar {

namespace {

CharacterFunctional restricted(const LieAlgebra& g, const Subalgebra& b, const LinearForm& f, int sigma) {
  QVector values;
  for (const auto& v : b.space().basis()) values.push_back(f(v) * Rational(sigma));
  return CharacterFunctional(g, b, std::move(values));
}

std::vector<std::pair<std::size_t, std::size_t>> all_pairs(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) out.emplace_back(i, j);
  return out;
}

}  // namespace

CharacterEvaluator::CharacterEvaluator(const QuotientContext& ctx, const LinearForm& f, const Polarization& pol,
                                       const Subspace& q_b, const Convention& conv)
    : ctx_(&ctx),
      f_(f),
      pol_(pol),
      conv_(conv),
      ctx_b_(ctx.algebra(), ctx.lambda(), q_b),
      ctx_o_(ctx.algebra(), restricted(ctx.algebra(), pol.b, f, conv.sigma),
             complement(ctx.algebra(), pol.b.space())) {
  const auto& h = ctx.h();
  for (std::size_t i = 0; i < h.dim(); ++i)
    if (f(h[i]) != ctx.lambda().values()[i]) throw MathError("form does not restrict to lambda on h");
}

QVector CharacterEvaluator::point(const Subspace& s) const {
  QVector p;
  for (const auto& v : s.basis()) p.push_back(f_(v) * Rational(conv_.eval_sign));
  return p;
}

SymPoly<Rational> CharacterEvaluator::in_supplement(const SymPoly<Rational>& u) const {
  return change_supplement(*ctx_, ctx_b_, u);
}

Rational CharacterEvaluator::gamma_ct(const SymPoly<Rational>& u) const {
  const QVector p = point(ctx_b_.q());
  return in_supplement(u).evaluate<Rational>(p);
}

OracleValue CharacterEvaluator::oracle(const SymPoly<Rational>& u) const {
  const auto moved = ctx_->transport_to(ctx_o_, ctx_->beta_q(u));
  OracleValue out;
  out.residual = ctx_o_.beta_q_inverse(ctx_o_.reduce(moved));
  out.residual_is_constant = out.residual.degree() <= 0;
  const QVector p = point(ctx_o_.q());
  out.value = out.residual.evaluate<Rational>(p);
  return out;
}

CharacterReport character_report(const CharacterEvaluator& ev, const QuotientContext& ctx,
                                 const std::vector<SymPoly<Rational>>& basis, const std::string& method) {
  if (method != "ct" && method != "polarization") throw MathError("unknown character method '" + method + "'");
  const bool ct = method == "ct";
  CharacterReport r;
  r.f = ev.polarization().f;
  r.method = method;
  r.convention = ev.convention();
  auto value = [&](const SymPoly<Rational>& u) {
    if (ct) return ev.gamma_ct(u);
    const OracleValue o = ev.oracle(u);
    r.residuals_constant = r.residuals_constant && o.residual_is_constant;
    return o.value;
  };
  for (const auto& p : basis) r.values.push_back(value(p));
  const auto names = ctx.q_names();
  const auto one = SymPoly<Rational>::constant(ctx.q_dim(), Rational::one());
  if (value(one) != Rational::one()) {
    r.multiplicative = false;
    r.failures.push_back("unit is not sent to 1");
  }
  for (const auto& [i, j] : all_pairs(basis.size())) {
    const Rational prod = value(quotient_product(ctx, basis[i], basis[j]));
    ++r.pairs_checked;
    if (prod != r.values[i] * r.values[j]) {
      r.multiplicative = false;
      r.failures.push_back("value(" + basis[i].to_string(names) + " * " + basis[j].to_string(names) +
                           ") = " + prod.to_string() + ", product of values = " + (r.values[i] * r.values[j]).to_string());
    }
  }
  return r;
}

CharacterReport gamma_ct_report(const QuotientContext& ctx, const std::vector<SymPoly<Rational>>& basis,
                                const LinearForm& f, const Convention& conv) {
  const Polarization pol = transverse_polarization(ctx.algebra(), ctx.h().space(), f);
  const CharacterEvaluator ev(ctx, f, pol, adapted_supplement(ctx.algebra(), ctx.h().space(), pol.b.space()), conv);
  return character_report(ev, ctx, basis, "ct");
}

CharacterComparison compare_characters(const QuotientContext& ctx, const std::vector<SymPoly<Rational>>& basis,
                                       const LinearForm& f, const Convention& conv, bool search) {
  const LieAlgebra& g = ctx.algebra();
  const Subspace& h = ctx.h().space();
  const Polarization pol = transverse_polarization(g, h, f);
  const Subspace canonical = adapted_supplement(g, h, pol.b.space());

  auto agrees = [&](const Subspace& q_b) {
    const CharacterEvaluator ev(ctx, f, pol, q_b, conv);
    for (const auto& p : basis)
      if (ev.gamma_ct(p) != ev.oracle(p).value) return false;
    return true;
  };

  CharacterComparison out{{}, {}, false, pol, canonical, std::nullopt};
  out.agreement = agrees(canonical);
  if (!out.agreement && search) {
    out.shear = shear_search(canonical, h, agrees);
    if (out.shear) {
      out.q_b = apply_shear(canonical, h, *out.shear);
      out.agreement = true;
    }
  }
  const CharacterEvaluator ev(ctx, f, pol, out.q_b, conv);
  out.ct = character_report(ev, ctx, basis, "ct");
  out.polarization = character_report(ev, ctx, basis, "polarization");
  return out;
}

std::vector<LinearForm> sample_generic_forms(const LieAlgebra& g, const CharacterFunctional& lambda, int k,
                                             std::uint64_t seed) {
  if (k <= 0) throw MathError("need at least one sample");
  const LagrangianReport lag = lagrangian_check(g, lambda, std::max(k, 8), seed);
  if (!lag.holds_generically)
    throw MathError("lagrangian condition fails at the maximal sampled profile (" + std::to_string(lag.max_dim_h) +
                    ", " + std::to_string(lag.max_dim_g) + ")");
  const Subspace& h = lambda.subalgebra().space();
  FormSampler sampler(g, lambda, seed);
  std::vector<LinearForm> out;
  while (static_cast<int>(out.size()) < k) {
    out.push_back(sampler.next_where([&](const LinearForm& f) {
      const OrbitDims d = orbit_dims(g, h, f);
      if (d.dim_h_orbit != lag.max_dim_h || d.dim_g_orbit != lag.max_dim_g) return false;
      try {
        transverse_polarization(g, h, f);
      } catch (const MathError&) {
        return false;
      }
      return true;
    }));
  }
  return out;
}

const Calibration& calibration() {
  static const Calibration cal = [] {
    const AlgebraFile file = builtin("heisenberg3");
    const auto& lambda = file.character("lambda").lambda;
    const LieAlgebra& g = file.algebra;
    const QuotientContext ctx(g, lambda, complement(g, lambda.subalgebra().space()));
    const auto basis = invariants(ctx, 2).elements;
    const std::size_t z = *g.index_of("Z");
    FormSampler sampler(g, lambda, 0);
    const LinearForm f = sampler.next_where([&](const LinearForm& l) { return !l.values()[z].is_zero(); });
    Calibration c;
    bool found = false;
    for (const Convention conv : {Convention{1, -1}, Convention{1, 1}, Convention{-1, 1}, Convention{-1, -1}}) {
      const bool ok = compare_characters(ctx, basis, f, conv, false).agreement;
      c.table.emplace_back(conv, ok);
      if (ok && !found) {
        c.chosen = conv;
        found = true;
      }
    }
    if (!found) throw MathError("calibration failed: no sign convention matches the Heisenberg instance");
    return c;
  }();
  return cal;
}

ExampleReport verify_example_correction(const ExampleCheckOptions& options) {
  if (options.trials <= 0) throw MathError("example check needs at least one trial");
  if (options.point_sign != 1 && options.point_sign != -1) throw MathError("point sign must be +1 or -1");
  const AlgebraFile file = builtin("example5");
  const LieAlgebra& g = file.algebra;
  const Subalgebra& h = file.subalgebra("h");
  const CharacterFunctional& lambda = file.character("lambda").lambda;
  const std::vector<std::size_t> uvz{*g.index_of("U"), *g.index_of("V"), *g.index_of("Z")};
  const QuotientContext ctx(g, lambda, complement(g, h.space(), uvz));

  ExampleReport report;
  report.options = options;
  report.invariants = invariants(ctx, options.degree).elements;
  const auto names = ctx.q_names();

  FormSampler sampler(g, lambda, options.seed);
  for (int t = 0; t < options.trials; ++t) {
    ExampleTrial trial;
    trial.f = sampler.next_where([&](const LinearForm& l) { return !l.values()[uvz[2]].is_zero(); });
    trial.l = trial.f.scaled(Rational(options.point_sign));
    const Rational z = trial.l.values()[uvz[2]];
    QVector at_l;
    for (const auto& v : ctx.q().basis()) at_l.push_back(trial.l(v));
    const auto op = exp_diff_op(example_correction(z), options.degree);
    const auto scalar_op = exp_diff_op(example_scalar_correction(z), options.degree);

    auto check = [&](const Subspace& q_l, std::vector<std::string>* residuals) {
      const QuotientContext target(g, lambda, q_l);
      bool op_ok = true, scalar_ok = true;
      for (const auto& p : report.invariants) {
        const auto moved = identify_along_h(target, ctx, change_supplement(ctx, target, p));
        const auto expected = op.apply(p);
        if (moved != expected) {
          op_ok = false;
          if (residuals)
            residuals->push_back("operator form, u = " + p.to_string(names) + ": residual " +
                                 (moved - expected).to_string(names));
        }
        const Rational lhs = p.evaluate<Rational>(at_l);
        const Rational rhs = scalar_op.apply(moved).evaluate<Rational>(at_l);
        if (lhs != rhs) {
          scalar_ok = false;
          if (residuals)
            residuals->push_back("scalar form, u = " + p.to_string(names) + ": residual " + (lhs - rhs).to_string());
        }
        if (!residuals && !(op_ok && scalar_ok)) break;
      }
      return std::make_pair(op_ok, scalar_ok);
    };

    const Polarization pol = transverse_polarization(g, h.space(), trial.f);
    trial.q_l = adapted_supplement(g, h.space(), pol.b.space());
    std::tie(trial.canonical_operator, trial.canonical_scalar) = check(trial.q_l, &trial.residuals);
    trial.operator_identity = trial.canonical_operator;
    trial.scalar_identity = trial.canonical_scalar;
    if (!(trial.canonical_operator && trial.canonical_scalar) && options.search) {
      trial.shear = shear_search(trial.q_l, h.space(), [&](const Subspace& q) {
        const auto [a, b] = check(q, nullptr);
        return a && b;
      });
      if (trial.shear) trial.operator_identity = trial.scalar_identity = true;
    }
    report.operator_identity = report.operator_identity && trial.operator_identity;
    report.scalar_identity = report.scalar_identity && trial.scalar_identity;
    report.trials.push_back(std::move(trial));
  }
  return report;
}

}  // namespace nilchar
